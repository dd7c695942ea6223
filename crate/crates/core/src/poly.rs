//! Exact univariate polynomials over the integers, plus the named
//! polynomial families built from the path-counting coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::count::{binomial, exact_div, gen_narayana, narayana, w_formula};

/// Dense integer polynomial, coefficients in ascending degree order with no
/// trailing zeros. The zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExactPoly {
    coeffs: Vec<BigInt>,
}

impl ExactPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPoly { coeffs }
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        ExactPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ExactPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ExactPoly::from_i64(&[1])
    }

    /// The monomial `c t^d`.
    pub fn monomial(c: BigInt, d: usize) -> Self {
        if c.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = c;
        ExactPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficient slice without trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        ExactPoly::new(coeffs)
    }

    pub fn sub(&self, other: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        ExactPoly::new(coeffs)
    }

    pub fn neg(&self) -> ExactPoly {
        ExactPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &ExactPoly) -> ExactPoly {
        if self.is_zero() || other.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ExactPoly::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> ExactPoly {
        if c.is_zero() {
            return ExactPoly::zero();
        }
        ExactPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `t^d`.
    pub fn mul_xpow(&self, d: usize) -> ExactPoly {
        if self.is_zero() {
            return ExactPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        ExactPoly { coeffs }
    }

    pub fn pow(&self, e: usize) -> ExactPoly {
        let mut acc = ExactPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> ExactPoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        ExactPoly::new(coeffs)
    }

    /// Gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content, preserving the leading sign. The zero
    /// polynomial maps to itself.
    pub fn primitive(&self) -> ExactPoly {
        if self.is_zero() {
            return ExactPoly::zero();
        }
        let c = self.content();
        ExactPoly { coeffs: self.coeffs.iter().map(|a| a / &c).collect() }
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`
    /// over the integers. Division by zero returns `None`.
    pub fn div_exact(&self, d: &ExactPoly) -> Option<ExactPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(ExactPoly::zero());
        }
        let (q, r) = RatPoly::from_exact(self).divmod(&RatPoly::from_exact(d));
        if !r.is_zero() {
            return None;
        }
        q.to_exact()
    }

    /// Polynomial gcd, returned primitive with positive leading coefficient;
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &ExactPoly) -> ExactPoly {
        if self.is_zero() {
            return normalize_positive(other.primitive());
        }
        if other.is_zero() {
            return normalize_positive(self.primitive());
        }
        let mut a = RatPoly::from_exact(self);
        let mut b = RatPoly::from_exact(other);
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        normalize_positive(a.to_primitive_exact())
    }

    /// The product of the distinct irreducible factors, primitive with
    /// positive leading coefficient. Nonzero constants map to `1`; zero maps
    /// to zero.
    pub fn squarefree_part(&self) -> ExactPoly {
        if self.is_zero() {
            return ExactPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        // Gauss: a primitive divisor of an integer polynomial has an integer
        // cofactor.
        let q = self.div_exact(&g).expect("primitive gcd divides");
        normalize_positive(q.primitive())
    }

    /// Yun squarefree decomposition: pairs `(p, e)` with the `p` primitive,
    /// squarefree, pairwise coprime, nonconstant, and
    /// `self = c * prod p^e` for a rational constant `c`. Constants and zero
    /// decompose into the empty list.
    pub fn yun(&self) -> Vec<(ExactPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = RatPoly::from_exact(self);
        let df = f.derivative();
        let a = RatPoly::from_exact(&self.gcd(&self.derivative()));
        let (mut b, r) = f.divmod(&a);
        debug_assert!(r.is_zero());
        let (c0, r) = df.divmod(&a);
        debug_assert!(r.is_zero());
        let mut d = c0.sub(&b.derivative());
        let mut e = 1usize;
        while b.degree().unwrap_or(0) > 0 {
            let p = b.to_primitive_exact().gcd(&d.to_primitive_exact());
            let pr = RatPoly::from_exact(&p);
            let (nb, r) = b.divmod(&pr);
            debug_assert!(r.is_zero());
            let (c, r) = d.divmod(&pr);
            debug_assert!(r.is_zero());
            b = nb;
            d = c.sub(&b.derivative());
            if p.degree().unwrap_or(0) > 0 {
                out.push((normalize_positive(p), e));
            }
            e += 1;
        }
        out
    }
}

fn normalize_positive(p: ExactPoly) -> ExactPoly {
    match p.leading() {
        Some(l) if l.is_negative() => p.neg(),
        _ => p,
    }
}

/// Rational-coefficient workhorse behind division-based routines. Same
/// layout conventions as [`ExactPoly`].
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub(crate) fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub(crate) fn from_exact(p: &ExactPoly) -> Self {
        RatPoly {
            coeffs: p.coeffs.iter().map(|c| BigRational::from(c.clone())).collect(),
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub(crate) fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub(crate) fn derivative(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    /// Panics on division by zero.
    pub(crate) fn divmod(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (RatPoly::new(Vec::new()), RatPoly::new(rem));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = &rem[i] / &lead;
            if q.is_zero() {
                continue;
            }
            for j in 0..dd {
                let t = &q * &d.coeffs[j];
                rem[i - dd + j] -= t;
            }
            rem[i] = BigRational::zero();
            quot[i - dd] = q;
        }
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    /// Clears denominators and divides by the content, preserving the
    /// leading sign.
    pub(crate) fn to_primitive_exact(&self) -> ExactPoly {
        if self.is_zero() {
            return ExactPoly::zero();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| {
                let scaled = c * BigRational::from(lcm.clone());
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            })
            .collect();
        ExactPoly::new(ints).primitive()
    }

    /// Converts back to integers, or `None` if any coefficient is
    /// fractional.
    fn to_exact(&self) -> Option<ExactPoly> {
        let mut ints = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            ints.push(c.to_integer());
        }
        Some(ExactPoly::new(ints))
    }
}

/// `W_{n,k}(t) = sum_m w_{n,k,m} t^m`, the joint-statistic polynomial for
/// fixed `n` and `k`. Zero when `k > n`.
pub fn w_poly(n: u32, k: u32) -> ExactPoly {
    ExactPoly::new((0..=k).map(|m| w_formula(n, k, m)).collect())
}

/// Narayana polynomial `Nar_k(t) = sum_m N_{k,m} t^m` (so `Nar_0 = 1` and
/// `Nar_k` has zero constant term for `k >= 1`).
pub fn narayana_poly(k: u32) -> ExactPoly {
    ExactPoly::new((0..=k).map(|m| narayana(k as i64, m as i64)).collect())
}

/// Generalized Narayana polynomial
/// `Nar^{(r)}_k(t) = sum_{m=0}^{k-r} N^{(r)}_{k,m} t^m`; `r = 0` recovers
/// [`narayana_poly`].
pub fn gen_narayana_poly(k: u32, r: u32) -> ExactPoly {
    if r > k {
        return ExactPoly::zero();
    }
    ExactPoly::new(
        (0..=k - r)
            .map(|m| gen_narayana(k as i64, m as i64, r as i64))
            .collect(),
    )
}

/// The other generalized Narayana family,
/// `BarNar^{(j)}_k(t) = sum_{i=0}^{k-j} ((j+1)/(k+1)) C(k+1,i) C(k+1,i+j+1) t^i`.
pub fn bar_narayana_poly(k: u32, j: u32) -> ExactPoly {
    if j > k {
        return ExactPoly::zero();
    }
    let (k, j) = (k as i64, j as i64);
    ExactPoly::new(
        (0..=k - j)
            .map(|i| {
                let num = BigInt::from(j + 1) * binomial(k + 1, i) * binomial(k + 1, i + j + 1);
                exact_div(num, &BigInt::from(k + 1))
            })
            .collect(),
    )
}

/// Hadamard (coefficientwise) product.
pub fn hadamard(f: &ExactPoly, g: &ExactPoly) -> ExactPoly {
    let n = f.coeffs.len().min(g.coeffs.len());
    ExactPoly::new((0..n).map(|i| f.coeff(i) * g.coeff(i)).collect())
}
