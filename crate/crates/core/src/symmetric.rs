//! Gamma-basis expansions and the symmetric two-part decomposition of the
//! joint-statistic polynomials `W_{n,k}(t)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::count::w_formula;
use crate::poly::{w_poly, ExactPoly};
use crate::{Error, Result};

/// Coordinates of a polynomial in the gamma basis
/// `{ t^j (1+t)^{center-2j} : 0 <= j <= center/2 }`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaExpansion {
    /// Symmetry frame: the polynomial equals its coefficient reversal in
    /// degrees `0..=center`.
    pub center: usize,
    /// `gammas[j]` multiplies `t^j (1+t)^{center-2j}`; length `center/2 + 1`.
    pub gammas: Vec<BigInt>,
}

impl GammaExpansion {
    /// Whether every gamma coordinate is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.gammas.iter().all(|g| !g.is_negative())
    }

    /// Rebuilds the expanded polynomial.
    pub fn to_poly(&self) -> ExactPoly {
        let mut acc = ExactPoly::zero();
        for (j, g) in self.gammas.iter().enumerate() {
            let basis = ExactPoly::from_i64(&[1, 1])
                .pow(self.center - 2 * j)
                .mul_xpow(j);
            acc = acc.add(&basis.scale(g));
        }
        acc
    }
}

/// Expands `f` over the gamma basis for symmetry frame `d`, peeling the
/// lowest uncovered coefficient at each step. Fails with
/// [`Error::NotSymmetric`] when `f` is not symmetric in that frame.
pub fn gamma_expansion(f: &ExactPoly, d: usize) -> Result<GammaExpansion> {
    let mut rem = f.clone();
    let mut gammas = Vec::with_capacity(d / 2 + 1);
    for j in 0..=d / 2 {
        let g = rem.coeff(j);
        if !g.is_zero() {
            let basis = ExactPoly::from_i64(&[1, 1]).pow(d - 2 * j).mul_xpow(j);
            rem = rem.sub(&basis.scale(&g));
        }
        gammas.push(g);
    }
    if !rem.is_zero() {
        return Err(Error::NotSymmetric { center: d });
    }
    Ok(GammaExpansion { center: d, gammas })
}

/// How `W_{n,k}` reassembles from the nonnegative parts
/// `(W^+, W^-)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignPattern {
    /// `W = W^+ - t W^-`; occurs when `n` equals `deg W + k` with
    /// `deg W != k`.
    PlusMinusT,
    /// `W = W^+ + t W^-`; occurs exactly when `n = 2k`.
    PlusPlusT,
    /// `W = -W^+ + t W^-`; occurs when `n > deg W + k`.
    MinusPlusT,
}

/// Two-part symmetric decomposition of `W_{n,k}(t)`.
///
/// The signed sequences are
/// `w+_0 = [n = k]`, `w+_i = sum_{j<=i} w_j - sum_{j<=i-1} w_{k-j}` and
/// `w-_i = sum_{j<=i} w_{k-j} - sum_{j<=i} w_j` over the full index range
/// `0..=k`; each has one uniform sign determined by the pattern. `plus` and
/// `minus` are their absolute values, symmetric in frames `k` and `k-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub n: u32,
    pub k: u32,
    /// `|w+|` as a polynomial, symmetric in frame `k`.
    pub plus: ExactPoly,
    /// `|w-|` as a polynomial, symmetric in frame `k-1`.
    pub minus: ExactPoly,
    /// Raw signed `w+` polynomial.
    pub plus_signed: ExactPoly,
    /// Raw signed `w-` polynomial.
    pub minus_signed: ExactPoly,
    pub pattern: SignPattern,
}

fn bug(msg: String) -> Error {
    Error::DecompositionBug(msg)
}

/// Computes the symmetric decomposition of `W_{n,k}(t)` for `1 <= k <= n`,
/// verifying the sign-uniformity, symmetry, and reassembly identities on the
/// way.
pub fn symmetric_decomposition(n: u32, k: u32) -> Result<Decomposition> {
    if k < 1 || k > n {
        return Err(Error::BadRange(format!(
            "decomposition needs 1 <= k <= n, got n={n} k={k}"
        )));
    }
    let k_us = k as usize;
    let w: Vec<BigInt> = (0..=k).map(|m| w_formula(n, k, m)).collect();
    let deg = w.iter().rposition(|c| !c.is_zero()).unwrap_or(0);

    // Prefix sums from both ends: fwd[i] = sum_{j<=i} w_j,
    // rev[i] = sum_{j<=i} w_{k-j}.
    let mut fwd = w.clone();
    let mut rev: Vec<BigInt> = w.iter().rev().cloned().collect();
    for i in 1..=k_us {
        fwd[i] = &fwd[i] + &fwd[i - 1];
        rev[i] = &rev[i] + &rev[i - 1];
    }

    let mut raw_plus = Vec::with_capacity(k_us + 1);
    raw_plus.push(if n == k { BigInt::one() } else { BigInt::zero() });
    for i in 1..=k_us {
        raw_plus.push(&fwd[i] - &rev[i - 1]);
    }
    let raw_minus: Vec<BigInt> = (0..=k_us).map(|i| &rev[i] - &fwd[i]).collect();

    if !raw_minus[k_us].is_zero() {
        return Err(bug(format!("w-_{k} is nonzero for n={n} k={k}")));
    }
    for i in 0..=k_us {
        if raw_plus[i] != raw_plus[k_us - i] {
            return Err(bug(format!("w+ not symmetric at i={i} for n={n} k={k}")));
        }
        if i < k_us && raw_minus[i] != raw_minus[k_us - 1 - i] {
            return Err(bug(format!("w- not symmetric at i={i} for n={n} k={k}")));
        }
    }

    let pattern = if n as usize == deg + k_us {
        if deg != k_us {
            SignPattern::PlusMinusT
        } else {
            SignPattern::PlusPlusT
        }
    } else if n as usize > deg + k_us {
        SignPattern::MinusPlusT
    } else {
        return Err(bug(format!("degree {deg} exceeds n-k for n={n} k={k}")));
    };
    let (plus_nonneg, minus_nonneg) = match pattern {
        SignPattern::PlusMinusT => (true, false),
        SignPattern::PlusPlusT => (true, true),
        SignPattern::MinusPlusT => (false, true),
    };
    let uniform = |seq: &[BigInt], nonneg: bool| {
        seq.iter()
            .all(|c| if nonneg { !c.is_negative() } else { !c.is_positive() })
    };
    if !uniform(&raw_plus, plus_nonneg) || !uniform(&raw_minus, minus_nonneg) {
        return Err(bug(format!("sign pattern violated for n={n} k={k}")));
    }

    let plus_signed = ExactPoly::new(raw_plus.clone());
    let minus_signed = ExactPoly::new(raw_minus.clone());
    let reassembled = plus_signed.add(&minus_signed.mul_xpow(1));
    if reassembled != w_poly(n, k) {
        return Err(bug(format!("reassembly failed for n={n} k={k}")));
    }

    let abs = |seq: Vec<BigInt>| ExactPoly::new(seq.into_iter().map(|c| c.abs()).collect());
    Ok(Decomposition {
        n,
        k,
        plus: abs(raw_plus),
        minus: abs(raw_minus),
        plus_signed,
        minus_signed,
        pattern,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::count::binomial;
    use crate::poly::narayana_poly;
    use crate::realroot::is_real_rooted;

    fn p(coeffs: &[i64]) -> ExactPoly {
        ExactPoly::from_i64(coeffs)
    }

    fn fact(n: i64) -> BigInt {
        (1..=n).map(BigInt::from).product()
    }

    #[test]
    fn gamma_expansion_examples() {
        let g = gamma_expansion(&p(&[1, 2, 1]), 2).unwrap();
        assert_eq!(g.gammas, vec![BigInt::one(), BigInt::zero()]);
        let g = gamma_expansion(&p(&[0, 1, 1, 1, 0]), 4).unwrap();
        assert_eq!(g.gammas[0], BigInt::zero());
        assert_eq!(g.to_poly(), p(&[0, 1, 1, 1, 0]));

        // Round trip from chosen coordinates.
        let chosen = GammaExpansion {
            center: 5,
            gammas: vec![BigInt::from(1), BigInt::from(-2), BigInt::from(3)],
        };
        let back = gamma_expansion(&chosen.to_poly(), 5).unwrap();
        assert_eq!(back, chosen);

        assert_eq!(gamma_expansion(&ExactPoly::zero(), 6).unwrap().to_poly(), ExactPoly::zero());
    }

    #[test]
    fn gamma_expansion_rejects_asymmetric() {
        assert_eq!(
            gamma_expansion(&p(&[0, 0, 1]), 3),
            Err(Error::NotSymmetric { center: 3 })
        );
        assert_eq!(
            gamma_expansion(&p(&[1, 2]), 1),
            Err(Error::NotSymmetric { center: 1 })
        );
        // Right frame matters: 1+t is symmetric in frame 1, not 3.
        assert!(gamma_expansion(&p(&[1, 1]), 1).is_ok());
        assert_eq!(
            gamma_expansion(&p(&[1, 1]), 3),
            Err(Error::NotSymmetric { center: 3 })
        );
    }

    #[test]
    fn narayana_gamma_coordinates() {
        // Nar_k expands in frame k+1 with
        // gamma_j = (k-1)! / ((k-2j+1)! (j-1)! j!) for j >= 1.
        for k in 1..=9i64 {
            let g = gamma_expansion(&narayana_poly(k as u32), k as usize + 1).unwrap();
            assert_eq!(g.gammas[0], BigInt::zero());
            for j in 1..=(k as usize + 1) / 2 {
                let j = j as i64;
                let expect = if k - 2 * j + 1 >= 0 {
                    fact(k - 1) / (fact(k - 2 * j + 1) * fact(j - 1) * fact(j))
                } else {
                    BigInt::zero()
                };
                assert_eq!(g.gammas[j as usize], expect, "k={k} j={j}");
            }
        }
    }

    #[test]
    fn w_poly_gamma_above_center() {
        // W_{2k+1,k} expands in frame k+1 with the Narayana gammas scaled by
        // C(2k+1,k-1).
        for k in 1..=8i64 {
            let f = w_poly(2 * k as u32 + 1, k as u32);
            let g = gamma_expansion(&f, k as usize + 1).unwrap();
            assert!(g.is_nonnegative(), "k={k}");
            let nar = gamma_expansion(&narayana_poly(k as u32), k as usize + 1).unwrap();
            let scale = binomial(2 * k + 1, k - 1);
            for (got, base) in g.gammas.iter().zip(&nar.gammas) {
                assert_eq!(*got, base * &scale, "k={k}");
            }
        }
    }

    #[test]
    fn w_poly_gamma_below_center() {
        // W_{2k-1,k} expands in frame k (one lower than the sibling family)
        // with gamma_j = C(2k-1,k-1) (k-2)! / ((k-2j)! (j-1)! j!).
        for k in 2..=9i64 {
            let f = w_poly(2 * k as u32 - 1, k as u32);
            let g = gamma_expansion(&f, k as usize).unwrap();
            assert!(g.is_nonnegative(), "k={k}");
            assert_eq!(g.gammas[0], BigInt::zero());
            for j in 1..=k as usize / 2 {
                let j = j as i64;
                let expect =
                    binomial(2 * k - 1, k - 1) * fact(k - 2) / (fact(k - 2 * j) * fact(j - 1) * fact(j));
                assert_eq!(g.gammas[j as usize], expect, "k={k} j={j}");
            }
        }
    }

    #[test]
    fn decomposition_worked_examples() {
        let d = symmetric_decomposition(4, 2).unwrap();
        assert_eq!(d.pattern, SignPattern::PlusPlusT);
        assert_eq!(d.plus, p(&[0, 2]));
        assert_eq!(d.minus, p(&[2, 2]));
        assert_eq!(d.plus_signed, p(&[0, 2]));

        let d = symmetric_decomposition(5, 2).unwrap();
        assert_eq!(d.pattern, SignPattern::MinusPlusT);
        assert_eq!(d.plus, ExactPoly::zero());
        assert_eq!(d.minus, p(&[5, 5]));

        let d = symmetric_decomposition(5, 3).unwrap();
        assert_eq!(d.pattern, SignPattern::PlusMinusT);
        assert_eq!(d.plus, p(&[0, 10, 10]));
        assert_eq!(d.minus, ExactPoly::zero());

        let d = symmetric_decomposition(6, 2).unwrap();
        assert_eq!(d.pattern, SignPattern::MinusPlusT);
        assert_eq!(d.plus, p(&[0, 3]));
        assert_eq!(d.plus_signed, p(&[0, -3]));
        assert_eq!(d.minus, p(&[9, 9]));

        let d = symmetric_decomposition(1, 1).unwrap();
        assert_eq!(d.pattern, SignPattern::PlusMinusT);
        assert_eq!(d.plus, p(&[1, 1]));
        assert_eq!(d.minus, p(&[1]));

        let d = symmetric_decomposition(4, 4).unwrap();
        assert_eq!(d.plus, p(&[1, 1, 1, 1, 1]));
        assert_eq!(d.minus, p(&[1, 1, 1, 1]));
    }

    #[test]
    fn decomposition_range_checks() {
        assert!(matches!(symmetric_decomposition(5, 0), Err(Error::BadRange(_))));
        assert!(matches!(symmetric_decomposition(3, 4), Err(Error::BadRange(_))));
    }

    #[test]
    fn decomposition_sweep_holds_invariants() {
        // The constructor re-derives every claimed identity; a sweep makes
        // sure none of them ever trips, and re-checks reassembly per pattern.
        for n in 1..=20u32 {
            for k in 1..=n {
                let d = symmetric_decomposition(n, k).unwrap();
                let t_minus = d.minus.mul_xpow(1);
                let rebuilt = match d.pattern {
                    SignPattern::PlusMinusT => d.plus.sub(&t_minus),
                    SignPattern::PlusPlusT => d.plus.add(&t_minus),
                    SignPattern::MinusPlusT => t_minus.sub(&d.plus),
                };
                assert_eq!(rebuilt, w_poly(n, k), "n={n} k={k}");
                assert_eq!(d.pattern == SignPattern::PlusPlusT, n == 2 * k);
            }
        }
    }

    #[test]
    fn decomposition_parts_are_gamma_expandable() {
        for n in 1..=16u32 {
            for k in 1..=n {
                let d = symmetric_decomposition(n, k).unwrap();
                assert!(gamma_expansion(&d.plus, k as usize).is_ok(), "n={n} k={k}");
                assert!(
                    gamma_expansion(&d.minus, k as usize - 1).is_ok(),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn decomposition_parts_real_rootedness_spot_checks() {
        // (5,3): plus = 10t(1+t) real-rooted, minus zero.
        let d = symmetric_decomposition(5, 3).unwrap();
        assert_eq!(is_real_rooted(&d.plus), Ok(true));
        // (3,3): plus = 1+t+t^2+t^3 has complex roots.
        let d = symmetric_decomposition(3, 3).unwrap();
        assert_eq!(is_real_rooted(&d.plus), Ok(false));
    }
}
