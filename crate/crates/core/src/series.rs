//! Truncated trivariate power series and the functional equation for the
//! joint distribution.
//!
//! `W(x, y, z)` sums `x^semilength y^(UD-factors) z^(UUD-factors)` over all
//! Dyck words, the empty word contributing the constant term. Splitting a
//! nonempty word at its first return to the axis yields the quadratic
//! `u W^2 - v W + 1 = 0` with `u = x - x^2 y + x^2 y z` and
//! `v = 1 + x - x y`, solved here as a fixed point that freezes one
//! `x`-order per round.

use crate::count::w_formula;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A polynomial in `x, y, z` truncated at a fixed total `x`-degree. Keys are
/// `(n, k, m)` exponents; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriSeries {
    order: u32,
    coeffs: BTreeMap<(u32, u32, u32), BigInt>,
}

impl TriSeries {
    /// The zero series truncated at `x^order`.
    pub fn zero(order: u32) -> Self {
        TriSeries { order, coeffs: BTreeMap::new() }
    }

    /// The constant series 1.
    pub fn one(order: u32) -> Self {
        Self::monomial(order, (0, 0, 0), BigInt::one())
    }

    /// A single term `c x^n y^k z^m`, dropped if `n` exceeds the order.
    pub fn monomial(order: u32, key: (u32, u32, u32), c: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if key.0 <= order && !c.is_zero() {
            coeffs.insert(key, c);
        }
        TriSeries { order, coeffs }
    }

    /// Truncation order in `x`.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Coefficient of `x^n y^k z^m`.
    pub fn coeff(&self, n: u32, k: u32, m: u32) -> BigInt {
        self.coeffs.get(&(n, k, m)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms in `(n, k, m)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32, u32), &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_orders(&self, rhs: &TriSeries) -> Result<()> {
        if self.order != rhs.order {
            return Err(Error::OrderMismatch { left: self.order as usize, right: rhs.order as usize });
        }
        Ok(())
    }

    pub fn add(&self, rhs: &TriSeries) -> Result<TriSeries> {
        self.check_orders(rhs)?;
        let mut out = self.clone();
        for (key, c) in &rhs.coeffs {
            let entry = out.coeffs.entry(*key).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                out.coeffs.remove(key);
            }
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &TriSeries) -> Result<TriSeries> {
        self.check_orders(rhs)?;
        let mut out = self.clone();
        for (key, c) in &rhs.coeffs {
            let entry = out.coeffs.entry(*key).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                out.coeffs.remove(key);
            }
        }
        Ok(out)
    }

    /// Product truncated at the common order. Keys sort by `n` first, so the
    /// inner loop stops as soon as the `x`-degrees overflow.
    pub fn mul(&self, rhs: &TriSeries) -> Result<TriSeries> {
        self.check_orders(rhs)?;
        let mut out = TriSeries::zero(self.order);
        for (&(n1, k1, m1), c1) in &self.coeffs {
            for (&(n2, k2, m2), c2) in &rhs.coeffs {
                if n1 + n2 > self.order {
                    break;
                }
                let key = (n1 + n2, k1 + k2, m1 + m2);
                let entry = out.coeffs.entry(key).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Multiplies by `c x^n y^k z^m`, truncating at the order.
    pub fn scale_monomial(&self, (n, k, m): (u32, u32, u32), c: &BigInt) -> TriSeries {
        let mut out = TriSeries::zero(self.order);
        if c.is_zero() {
            return out;
        }
        for (&(n1, k1, m1), c1) in &self.coeffs {
            if n1 + n > self.order {
                break;
            }
            out.coeffs.insert((n1 + n, k1 + k, m1 + m), c1 * c);
        }
        out
    }
}

/// `u W^2 - v W + 1` at the series' truncation order; identically zero when
/// `W` is the joint distribution series.
pub fn residual(w: &TriSeries) -> Result<TriSeries> {
    let order = w.order();
    let one = BigInt::one();
    // u = x - x^2 y + x^2 y z
    let u = TriSeries::monomial(order, (1, 0, 0), one.clone())
        .sub(&TriSeries::monomial(order, (2, 1, 0), one.clone()))?
        .add(&TriSeries::monomial(order, (2, 1, 1), one.clone()))?;
    // v = 1 + x - x y
    let v = TriSeries::one(order)
        .add(&TriSeries::monomial(order, (1, 0, 0), one.clone()))?
        .sub(&TriSeries::monomial(order, (1, 1, 0), one))?;
    u.mul(&w.mul(w)?)?.sub(&v.mul(w)?)?.add(&TriSeries::one(order))
}

/// Solves `u W^2 - v W + 1 = 0` with `W(0) = 1` by iterating
/// `W <- 1 + V(W) W` where `V = x y + x^2 y z W + x (W - 1 - x y W)`; every
/// term of `V` carries a positive power of `x`, so each round fixes one more
/// `x`-order and the truncated iteration reaches its fixed point.
pub fn solve_functional_equation(order: u32) -> TriSeries {
    let one_big = BigInt::one();
    let one = TriSeries::one(order);
    let mut w = one.clone();
    for _ in 0..=order + 1 {
        let v = TriSeries::monomial(order, (1, 1, 0), one_big.clone())
            .add(&w.scale_monomial((2, 1, 1), &one_big))
            .and_then(|v| {
                let tail = w
                    .sub(&one)?
                    .sub(&w.scale_monomial((1, 1, 0), &one_big))?
                    .scale_monomial((1, 0, 0), &one_big);
                v.add(&tail)
            })
            .expect("orders agree by construction");
        let next = one.add(&v.mul(&w).expect("orders agree")).expect("orders agree");
        if next == w {
            return w;
        }
        w = next;
    }
    let check = residual(&w).expect("orders agree");
    assert!(check.is_zero(), "iteration converged within order + 2 rounds");
    w
}

/// The same series assembled term by term from the closed formula.
pub fn series_from_formula(order: u32) -> TriSeries {
    let mut out = TriSeries::zero(order);
    for n in 0..=order {
        for k in 0..=n {
            for m in 0..=k {
                let c = w_formula(n, k, m);
                if !c.is_zero() {
                    out.coeffs.insert((n, k, m), c);
                }
            }
        }
    }
    out
}
