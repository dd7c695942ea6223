//! Brute-force ground truth: count Dyck words by direct enumeration.
//!
//! Every closed formula in [`crate::count`] is checked against these
//! oracles, which only use [`crate::dyck::enumerate_dyck`] and factor
//! counting. The full joint tables avoid re-enumerating per query.

use crate::dyck::enumerate_dyck;
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// Joint factor-count statistics of one Dyck word.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StatProfile {
    /// Semilength.
    pub n: usize,
    /// `counts[i]` is the number of `U^(i+1) D`-factors; nonincreasing.
    pub counts: Vec<usize>,
}

impl StatProfile {
    /// Profile of a word truncated to the first `r` statistics.
    pub fn of_word(word: &crate::dyck::DyckWord, r: usize) -> Self {
        assert!(r >= 1, "at least one statistic");
        let counts = (1..=r).map(|i| word.count_factor(i)).collect();
        StatProfile {
            n: word.semilength(),
            counts,
        }
    }
}

/// Number of Dyck words of semilength `n` with `k` `UD`-factors and `m`
/// `UUD`-factors, counted by enumeration. Degenerate queries (`m > k` or
/// `k + m > n`) short-circuit to zero, which is also what enumeration gives.
pub fn w_oracle(n: usize, k: usize, m: usize) -> BigInt {
    if m > k || k + m > n {
        return BigInt::from(0);
    }
    let count = enumerate_dyck(n)
        .filter(|w| w.count_factor(1) == k && w.count_factor(2) == m)
        .count();
    BigInt::from(count)
}

/// Number of Dyck words of semilength `n` whose first `ks.len()` factor
/// counts equal `ks`, counted by enumeration.
pub fn w_oracle_multi(n: usize, ks: &[usize]) -> BigInt {
    assert!(!ks.is_empty(), "at least one statistic is required");
    if ks.windows(2).any(|p| p[0] < p[1]) {
        return BigInt::from(0);
    }
    let count = enumerate_dyck(n)
        .filter(|w| ks.iter().enumerate().all(|(i, &k)| w.count_factor(i + 1) == k))
        .count();
    BigInt::from(count)
}

/// Full table of `(k, m) -> count` over all Dyck words of semilength `n`,
/// built in one enumeration pass. Only nonzero entries appear.
pub fn oracle_table(n: usize) -> BTreeMap<(usize, usize), BigInt> {
    let mut table: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for w in enumerate_dyck(n) {
        let key = (w.count_factor(1), w.count_factor(2));
        *table.entry(key).or_default() += 1;
    }
    table
}

/// Full table of `(k_1..k_r) -> count` over all Dyck words of semilength
/// `n`, built in one enumeration pass. Only nonzero entries appear.
pub fn oracle_table_multi(n: usize, r: usize) -> BTreeMap<Vec<usize>, BigInt> {
    assert!(r >= 1, "at least one statistic");
    let mut table: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    for w in enumerate_dyck(n) {
        let key: Vec<usize> = (1..=r).map(|i| w.count_factor(i)).collect();
        *table.entry(key).or_default() += 1;
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::{narayana, w_formula};
    use num_bigint::BigInt;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn oracle_spot_values() {
        assert_eq!(w_oracle(5, 2, 1), bi(5));
        assert_eq!(w_oracle(6, 3, 2), bi(30));
        assert_eq!(w_oracle(0, 0, 0), bi(1));
        assert_eq!(w_oracle_multi(4, &[2]), bi(6));
        assert_eq!(w_oracle_multi(5, &[5]), bi(1));
        assert_eq!(w_oracle_multi(3, &[1, 2]), bi(0));
    }

    #[test]
    fn oracle_matches_formula_small() {
        for n in 0..=9usize {
            for k in 0..=n {
                for m in 0..=k {
                    assert_eq!(
                        w_oracle(n, k, m),
                        w_formula(n as u32, k as u32, m as u32),
                        "n={n} k={k} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn oracle_table_agrees_with_pointwise_queries() {
        for n in 0..=8usize {
            let table = oracle_table(n);
            let total: BigInt = table.values().cloned().sum();
            assert_eq!(total, crate::count::catalan(n as u32));
            for (&(k, m), count) in &table {
                assert_eq!(*count, w_oracle(n, k, m), "n={n} k={k} m={m}");
            }
        }
    }

    #[test]
    fn single_statistic_is_narayana() {
        for n in 0..=9usize {
            for k in 0..=n {
                assert_eq!(w_oracle_multi(n, &[k]), narayana(n as i64, k as i64), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn profile_is_nonincreasing() {
        for w in enumerate_dyck(7) {
            let profile = StatProfile::of_word(&w, 7);
            assert!(profile.counts.windows(2).all(|p| p[0] >= p[1]), "{w}");
        }
    }
}
