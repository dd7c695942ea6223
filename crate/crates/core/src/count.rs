//! Exact closed-form counts with arbitrary-precision integers.
//!
//! Everything here multiplies binomials first and divides last, asserting
//! that every division is exact; an inexact division means a transcription
//! bug, not a rounding concern. One nonstandard convention is load-bearing:
//! `binomial(-1, -1) = 1`, which makes the generalized Narayana formula
//! correct on its boundary (the all-up path).

use crate::composition::enumerate_all_cyclic_classes;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact division, asserting zero remainder.
pub(crate) fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    assert!(!den.is_zero(), "division by zero");
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division: {num} by {den}");
    q
}

/// Binomial coefficient with the conventions used throughout: standard for
/// `n >= k >= 0`, zero when `k < 0` or `k > n`, except `binomial(-1,-1) = 1`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n == -1 && k == -1 {
        return BigInt::one();
    }
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    exact_div(num, &den)
}

/// Multinomial coefficient `C(n; parts)`; zero unless all parts are
/// nonnegative and sum to `n`.
pub fn multinomial(n: i64, parts: &[i64]) -> BigInt {
    if n < 0 || parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != n {
        return BigInt::zero();
    }
    let mut rest = n;
    let mut prod = BigInt::one();
    for &p in parts {
        prod *= binomial(rest, p);
        rest -= p;
    }
    prod
}

/// Catalan number `C_n`.
pub fn catalan(n: u32) -> BigInt {
    exact_div(binomial(2 * n as i64, n as i64), &BigInt::from(n + 1))
}

/// Narayana number `N_{n,k} = (1/n) C(n,k) C(n,k-1)`, with `N_{0,0} = 1`;
/// zero outside `0 <= k <= n`.
pub fn narayana(n: i64, k: i64) -> BigInt {
    if n == 0 && k == 0 {
        return BigInt::one();
    }
    if n <= 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    exact_div(binomial(n, k) * binomial(n, k - 1), &BigInt::from(n))
}

/// Generalized Narayana number
/// `N^{(r)}_{n,k} = ((r+1)/(n+1)) C(n+1,k) C(n-r-1,k-1)`,
/// the number of nonnegative paths with `n` up steps and `n-r` down steps
/// ending at height `r` with `k` peaks. `r = 0` recovers [`narayana`].
pub fn gen_narayana(n: i64, k: i64, r: i64) -> BigInt {
    if n < 0 || r < 0 || r > n || k < 0 || k > n - r {
        return BigInt::zero();
    }
    let num = BigInt::from(r + 1) * binomial(n + 1, k) * binomial(n - r - 1, k - 1);
    exact_div(num, &BigInt::from(n + 1))
}

/// Number of Dyck paths of semilength `n` with `k` peaks (`UD`-factors) and
/// `m` doublerise peaks (`UUD`-factors):
/// `(1/k) C(n,k-1) C(n-k-1,m-1) C(k,m)` when `m >= 1`, `m <= k`, `k+m <= n`;
/// `1` when `m = 0` and `n = k`; `0` otherwise.
pub fn w_formula(n: u32, k: u32, m: u32) -> BigInt {
    let (n, k, m) = (n as i64, k as i64, m as i64);
    if m == 0 {
        return if n == k { BigInt::one() } else { BigInt::zero() };
    }
    if m > k || k + m > n {
        return BigInt::zero();
    }
    let num = binomial(n, k - 1) * binomial(n - k - 1, m - 1) * binomial(k, m);
    exact_div(num, &BigInt::from(k))
}

/// Number of Dyck paths of semilength `n` with `k_i` maximal rises of length
/// at least `i` for every `i <= r` (so `ks` must be nonincreasing):
/// with `khat = k_1 + ... + k_{r-1}`, the count is
/// `(1/k_1) C(n,k_1-1) C(n-khat-1,k_r-1) C(k_1; k_1-k_2,...,k_{r-1}-k_r,k_r)`
/// when `k_r > 0`, the same without the middle binomial when `k_r = 0` and
/// `n = khat`, and `0` otherwise. `r = 1` recovers [`narayana`] and `r = 2`
/// recovers [`w_formula`].
pub fn w_formula_multi(n: u32, ks: &[u32]) -> BigInt {
    assert!(!ks.is_empty(), "at least one statistic is required");
    if ks.windows(2).any(|p| p[0] < p[1]) {
        return BigInt::zero();
    }
    let n = n as i64;
    let k1 = ks[0] as i64;
    let kr = *ks.last().unwrap() as i64;
    if k1 == 0 {
        return if n == 0 { BigInt::one() } else { BigInt::zero() };
    }
    let khat: i64 = ks[..ks.len() - 1].iter().map(|&k| k as i64).sum();
    let mut mparts: Vec<i64> = ks.windows(2).map(|p| (p[0] - p[1]) as i64).collect();
    mparts.push(kr);
    let mult = multinomial(k1, &mparts);
    let num = if kr > 0 {
        binomial(n, k1 - 1) * binomial(n - khat - 1, kr - 1) * mult
    } else if n == khat {
        binomial(n, k1 - 1) * mult
    } else {
        return BigInt::zero();
    };
    exact_div(num, &BigInt::from(k1))
}

/// Both sides of one instance of the peak-count identities relating
/// `w_{2k+j,k,m}` and `w_{2k-j,k,m}` to generalized Narayana numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityPair {
    /// Value from [`w_formula`].
    pub lhs: BigInt,
    /// Value from the binomial-times-Narayana side.
    pub rhs: BigInt,
}

impl IdentityPair {
    /// True when the two sides agree.
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluations of `w_{2k+j,k,m} = (1/j) C(2k+j,k-1) N^{(j-1)}_{k+j-1,m}` and,
/// when `j <= k`, of `w_{2k-j,k,m} = (1/j) C(2k-j,k-1) N^{(j-1)}_{k-1,m}`.
/// `j = 1` gives the classical odd cases `w_{2k+1,k,m} = C(2k+1,k-1) N_{k,m}`
/// and `w_{2k-1,k,m} = C(2k-1,k-1) N_{k-1,m}`.
#[derive(Debug, Clone)]
pub struct WIdentities {
    /// The `2k+j` identity.
    pub plus: IdentityPair,
    /// The `2k-j` identity, present when `1 <= j <= k`.
    pub minus: Option<IdentityPair>,
}

/// Evaluates both sides of the `2k±j` identities for the given `(k, m, j)`.
pub fn w_identities(k: u32, m: u32, j: u32) -> WIdentities {
    assert!(k >= 1 && j >= 1, "identities need k >= 1 and j >= 1");
    let (ki, mi, ji) = (k as i64, m as i64, j as i64);
    let plus_rhs = exact_div(
        binomial(2 * ki + ji, ki - 1) * gen_narayana(ki + ji - 1, mi, ji - 1),
        &BigInt::from(ji),
    );
    let plus = IdentityPair {
        lhs: w_formula(2 * k + j, k, m),
        rhs: plus_rhs,
    };
    let minus = (j <= k).then(|| {
        let rhs = exact_div(
            binomial(2 * ki - ji, ki - 1) * gen_narayana(ki - 1, mi, ji - 1),
            &BigInt::from(ji),
        );
        IdentityPair {
            lhs: w_formula(2 * k - j, k, m),
            rhs,
        }
    });
    WIdentities { plus, minus }
}

/// Which cyclic-composition family [`ccomp_count`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CcompVariant {
    /// `CComp_{2k+j,k,m}` with `j >= 1`.
    Plus,
    /// `CComp_{2k-j,k,m}` with `1 <= j <= k`.
    Minus,
    /// `CComp_{2k,k,m}` (the `j = 0` case).
    Zero,
}

/// Number of cyclic compositions of `2k±j` into `k` parts with exactly `m`
/// parts at least 2, by totient-weighted sums of generalized Narayana
/// numbers (or binomials when `j = 0`). `d` is the gcd of the nonzero values
/// among `k`, `m`, `j`.
pub fn ccomp_count(k: u32, m: u32, j: u32, variant: CcompVariant) -> BigInt {
    assert!(k >= 1, "k must be positive");
    match variant {
        CcompVariant::Plus => assert!(j >= 1, "plus variant needs j >= 1"),
        CcompVariant::Minus => assert!(j >= 1 && j <= k, "minus variant needs 1 <= j <= k"),
        CcompVariant::Zero => assert!(j == 0, "zero variant needs j = 0"),
    }
    let d = gcd_of_nonzero(&[k, m, j]);
    let mut sum = BigInt::zero();
    match variant {
        CcompVariant::Plus => {
            for s in divisors(d) {
                let (si, ki, mi, ji) = (s as i64, k as i64, m as i64, j as i64);
                sum += BigInt::from(totient(s)) * gen_narayana((ki + ji) / si - 1, mi / si, ji / si - 1);
            }
            exact_div(sum, &BigInt::from(j))
        }
        CcompVariant::Minus => {
            for s in divisors(d) {
                let (si, ki, mi, ji) = (s as i64, k as i64, m as i64, j as i64);
                sum += BigInt::from(totient(s)) * gen_narayana(ki / si - 1, mi / si, ji / si - 1);
            }
            exact_div(sum, &BigInt::from(j))
        }
        CcompVariant::Zero => {
            // Compositions of 2k into k parts always have a part >= 2.
            if m == 0 {
                return BigInt::zero();
            }
            for s in divisors(d) {
                let (si, ki, mi) = (s as i64, k as i64, m as i64);
                sum += BigInt::from(totient(s)) * binomial(ki / si - 1, mi / si - 1) * binomial(ki / si, mi / si);
            }
            exact_div(sum, &BigInt::from(k))
        }
    }
}

/// Catalan number computed as a double sum over divisors and primitive
/// cyclic compositions: `C_n = sum_{d|n} sum_{primitive [mu] of n/d}
/// (1/d) C(n, ord[mu] * d - 1)`. Must equal [`catalan`].
pub fn catalan_via_primitive(n: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::BadRange("primitive-class sum needs n >= 1".into()));
    }
    let mut total = BigRational::zero();
    for d in divisors(n) {
        for class in enumerate_all_cyclic_classes((n / d) as usize) {
            if !class.is_primitive() {
                continue;
            }
            let ord = class.order() as i64;
            let term = BigRational::new(binomial(n as i64, ord * d as i64 - 1), BigInt::from(d));
            total += term;
        }
    }
    assert!(total.is_integer(), "primitive-class sum must be an integer");
    Ok(total.to_integer())
}

/// Euler's totient, by trial division (inputs here are small).
pub fn totient(n: u32) -> u32 {
    assert!(n >= 1, "totient needs n >= 1");
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u32) -> Vec<u32> {
    assert!(n >= 1, "divisors need n >= 1");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

fn gcd_of_nonzero(values: &[u32]) -> u32 {
    let g = values.iter().filter(|&&v| v > 0).fold(0u32, |acc, &v| acc.gcd(&v));
    assert!(g >= 1, "at least one value must be nonzero");
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition::enumerate_cyclic_classes;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), bi(10));
        assert_eq!(binomial(-1, -1), bi(1));
        assert_eq!(binomial(3, -1), bi(0));
        assert_eq!(binomial(2, 5), bi(0));
        assert_eq!(binomial(-2, 0), bi(0));
        assert_eq!(binomial(-2, -2), bi(0));
        assert_eq!(binomial(0, 0), bi(1));
    }

    #[test]
    fn catalan_and_narayana_basics() {
        assert_eq!(catalan(3), bi(5));
        assert_eq!(catalan(10), bi(16796));
        assert_eq!(narayana(3, 2), bi(3));
        assert_eq!(narayana(0, 0), bi(1));
        assert_eq!(narayana(4, 0), bi(0));
        for n in 0..=20i64 {
            let row: BigInt = (0..=n).map(|k| narayana(n, k)).sum();
            assert_eq!(row, catalan(n as u32), "Narayana row sum, n = {n}");
            // Symmetry holds on the support 1..=n; n = 0 has only N_{0,0}.
            for k in 1..=n {
                assert_eq!(narayana(n, k), narayana(n, n + 1 - k), "symmetry n={n} k={k}");
            }
        }
    }

    #[test]
    fn gen_narayana_reduces_and_counts() {
        for n in 0..=12i64 {
            for k in 0..=n {
                assert_eq!(gen_narayana(n, k, 0), narayana(n, k), "r = 0, n={n} k={k}");
            }
        }
        assert_eq!(gen_narayana(2, 1, 1), bi(2));
        // Boundary: the all-up path is the only one with zero peaks.
        for n in 0..=6i64 {
            assert_eq!(gen_narayana(n, 0, n), bi(1));
        }
    }

    #[test]
    fn gen_narayana_matches_path_enumeration() {
        use crate::dyck::enumerate_gen_paths;
        for n in 0..=8usize {
            for r in 0..=n {
                let paths = enumerate_gen_paths(n, r);
                for k in 0..=n {
                    let count = paths.iter().filter(|p| p.count_factor(1) == k).count();
                    assert_eq!(
                        bi(count as i64),
                        gen_narayana(n as i64, k as i64, r as i64),
                        "n={n} r={r} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn w_formula_table_values() {
        assert_eq!(w_formula(7, 4, 2), bi(105));
        assert_eq!(w_formula(10, 5, 5), bi(42));
        assert_eq!(w_formula(5, 2, 1), bi(5));
        assert_eq!(w_formula(6, 3, 2), bi(30));
        assert_eq!(w_formula(0, 0, 0), bi(1));
        for k in 0..=8 {
            assert_eq!(w_formula(k, k, 0), bi(1));
        }
        assert_eq!(w_formula(6, 3, 4), bi(0));
        assert_eq!(w_formula(6, 4, 3), bi(0));
    }

    #[test]
    fn w_formula_multi_reductions() {
        for n in 0..=12u32 {
            for k in 0..=n {
                assert_eq!(w_formula_multi(n, &[k]), narayana(n as i64, k as i64), "r=1 n={n} k={k}");
                for m in 0..=k {
                    assert_eq!(w_formula_multi(n, &[k, m]), w_formula(n, k, m), "r=2 n={n} k={k} m={m}");
                }
            }
        }
        assert_eq!(w_formula_multi(3, &[1, 2]), bi(0), "nonincreasing required");
    }

    #[test]
    fn identity_examples() {
        let id = w_identities(3, 2, 1);
        assert_eq!(id.plus.lhs, bi(63));
        assert_eq!(id.plus.rhs, binomial(7, 2) * narayana(3, 2));
        assert!(id.plus.holds());
        let id = w_identities(2, 1, 1);
        let minus = id.minus.unwrap();
        assert_eq!(minus.lhs, bi(3));
        assert_eq!(minus.rhs, binomial(3, 1) * narayana(1, 1));
        let id = w_identities(1, 1, 2);
        assert_eq!(id.plus.lhs, bi(1));
        assert!(id.plus.holds());
        assert!(id.minus.is_none());
    }

    #[test]
    fn identities_hold_over_a_grid() {
        for k in 1..=8u32 {
            for j in 1..=4u32 {
                for m in 0..=k + 1 {
                    let id = w_identities(k, m, j);
                    assert!(id.plus.holds(), "plus k={k} m={m} j={j}");
                    if let Some(minus) = id.minus {
                        assert!(minus.holds(), "minus k={k} m={m} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn ccomp_count_examples() {
        assert_eq!(ccomp_count(2, 1, 1, CcompVariant::Plus), bi(1));
        assert_eq!(ccomp_count(2, 2, 0, CcompVariant::Zero), bi(1));
    }

    #[test]
    fn ccomp_count_matches_enumeration() {
        for k in 1..=6u32 {
            for m in 0..=k {
                for j in 0..=6u32 {
                    if j == 0 {
                        let n = 2 * k;
                        if n <= 12 {
                            let direct = enumerate_cyclic_classes(n as usize, k as usize, m as usize).len();
                            assert_eq!(
                                ccomp_count(k, m, 0, CcompVariant::Zero),
                                bi(direct as i64),
                                "zero k={k} m={m}"
                            );
                        }
                        continue;
                    }
                    if 2 * k + j <= 12 {
                        let direct = enumerate_cyclic_classes((2 * k + j) as usize, k as usize, m as usize).len();
                        assert_eq!(
                            ccomp_count(k, m, j, CcompVariant::Plus),
                            bi(direct as i64),
                            "plus k={k} m={m} j={j}"
                        );
                    }
                    if j <= k && 2 * k - j <= 12 {
                        let direct = enumerate_cyclic_classes((2 * k - j) as usize, k as usize, m as usize).len();
                        assert_eq!(
                            ccomp_count(k, m, j, CcompVariant::Minus),
                            bi(direct as i64),
                            "minus k={k} m={m} j={j}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn catalan_via_primitive_agrees() {
        assert_eq!(catalan_via_primitive(1).unwrap(), bi(1));
        assert_eq!(catalan_via_primitive(4).unwrap(), bi(14));
        for n in 1..=12u32 {
            assert_eq!(catalan_via_primitive(n).unwrap(), catalan(n), "n = {n}");
        }
        assert!(catalan_via_primitive(0).is_err());
    }

    #[test]
    fn totient_and_divisors() {
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(totient(13), 12);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }

    #[test]
    fn reflection_ratio() {
        for n in 2..=20u32 {
            for k in 1..=n - 1 {
                for m in 0..=k {
                    let lhs = w_formula(n, k, m) * bi(((n - k) * (n - k + 1)) as i64);
                    let rhs = w_formula(n, n - k, m) * bi((k * (k + 1)) as i64);
                    assert_eq!(lhs, rhs, "n={n} k={k} m={m}");
                }
            }
        }
    }

    #[test]
    fn multi_symmetry_odd_shifted() {
        // w_{rk+1,k,...,k,m} = w_{rk+1,k,...,k,k+1-m} and the rk-1 analogue.
        // The r = 1 form is the plain Narayana symmetry (covered above); the
        // rk-1 side needs k >= 2, since for k = 1 the claimed partner
        // w_{1,1,0} = 1 differs from w_{1,1,1} = 0.
        for r in 2..=4u32 {
            for k in 1..=6u32 {
                for m in 1..=k {
                    let mut ks_plus: Vec<u32> = vec![k; (r - 1) as usize];
                    ks_plus.push(m);
                    let mut ks_plus_ref: Vec<u32> = vec![k; (r - 1) as usize];
                    ks_plus_ref.push(k + 1 - m);
                    assert_eq!(
                        w_formula_multi(r * k + 1, &ks_plus),
                        w_formula_multi(r * k + 1, &ks_plus_ref),
                        "plus r={r} k={k} m={m}"
                    );
                    if k >= 2 {
                        let mut ks_minus: Vec<u32> = vec![k; (r - 1) as usize];
                        ks_minus.push(m);
                        let mut ks_minus_ref: Vec<u32> = vec![k; (r - 1) as usize];
                        ks_minus_ref.push(k - m);
                        assert_eq!(
                            w_formula_multi(r * k - 1, &ks_minus),
                            w_formula_multi(r * k - 1, &ks_minus_ref),
                            "minus r={r} k={k} m={m}"
                        );
                    }
                }
            }
        }
    }
}
