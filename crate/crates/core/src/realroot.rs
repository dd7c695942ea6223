//! Real-rootedness and interlacing tests via exact Sturm chains.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::{ExactPoly, RatPoly};
use crate::{Error, Result};

/// Sturm chain of `f`: starts `f, f'`, then negated remainders, each
/// rescaled by a positive constant to a primitive integer polynomial so the
/// sign data is untouched. `f` must be nonzero.
fn sturm_chain(f: &ExactPoly) -> Vec<ExactPoly> {
    debug_assert!(!f.is_zero());
    let mut chain = vec![f.clone()];
    let df = f.derivative();
    if df.is_zero() {
        return chain;
    }
    chain.push(df);
    loop {
        let a = RatPoly::from_exact(&chain[chain.len() - 2]);
        let b = RatPoly::from_exact(&chain[chain.len() - 1]);
        let (_, r) = a.divmod(&b);
        if r.is_zero() {
            return chain;
        }
        chain.push(r.to_primitive_exact().neg());
    }
}

/// Strict upper bound on the absolute value of every root:
/// `1 + max_i |c_i| / |c_d|`.
fn cauchy_bound(f: &ExactPoly) -> BigRational {
    let lead = f.leading().expect("nonzero polynomial").abs();
    let max = f
        .coeffs()
        .iter()
        .map(Signed::abs)
        .max()
        .expect("nonzero polynomial");
    BigRational::one() + BigRational::new(max, lead)
}

/// Number of sign changes along the chain at `x`, zeros skipped.
fn sign_variations(chain: &[ExactPoly], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in chain {
        let v = p.eval_rat(x);
        let s = if v.is_zero() {
            continue;
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots of `f`; `Err(ZeroPolynomial)` for zero.
pub fn sturm_distinct_real_roots(f: &ExactPoly) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        return Ok(0);
    }
    let chain = sturm_chain(f);
    let b = cauchy_bound(f);
    Ok(sign_variations(&chain, &-b.clone()) - sign_variations(&chain, &b))
}

/// Whether every complex root of `f` is real. Constants count as
/// real-rooted; the zero polynomial is an error.
pub fn is_real_rooted(f: &ExactPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let s = f.squarefree_part();
    let d = s.degree().expect("squarefree part of nonzero is nonzero");
    if d == 0 {
        return Ok(true);
    }
    Ok(sturm_distinct_real_roots(&s)? == d)
}

/// Location of one distinct real root: an exact rational value, or an open
/// interval containing exactly one root with non-root endpoints.
#[derive(Clone, Debug)]
enum RootLoc {
    Exact(BigRational),
    Open(BigRational, BigRational),
}

/// Isolates the distinct real roots of nonzero `f` into pairwise disjoint
/// locations, ascending.
fn isolate_roots(f: &ExactPoly) -> Vec<RootLoc> {
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = sturm_chain(f);
    let b = cauchy_bound(f);
    let a = -b.clone();
    let (va, vb) = (sign_variations(&chain, &a), sign_variations(&chain, &b));
    let mut out = Vec::new();
    split(&chain, f, (a, va), (b, vb), &mut out);
    out
}

fn split(
    chain: &[ExactPoly],
    f: &ExactPoly,
    (a, va): (BigRational, usize),
    (b, vb): (BigRational, usize),
    out: &mut Vec<RootLoc>,
) {
    // Invariant: f(a) != 0, f(b) != 0, so va - vb roots lie in the open
    // interval.
    match va - vb {
        0 => {}
        1 => out.push(RootLoc::Open(a, b)),
        _ => {
            let two = BigRational::from(BigInt::from(2));
            let m = (&a + &b) / &two;
            if !f.eval_rat(&m).is_zero() {
                let vm = sign_variations(chain, &m);
                split(chain, f, (a, va), (m.clone(), vm), out);
                split(chain, f, (m, vm), (b, vb), out);
                return;
            }
            // The midpoint is a root. Shrink a symmetric window until it
            // isolates the midpoint with non-root endpoints.
            let mut delta = (&b - &a) / (&two * &two);
            loop {
                let lam = &m - &delta;
                let rho = &m + &delta;
                if !f.eval_rat(&lam).is_zero() && !f.eval_rat(&rho).is_zero() {
                    let (vl, vr) = (sign_variations(chain, &lam), sign_variations(chain, &rho));
                    if vl - vr == 1 {
                        split(chain, f, (a, va), (lam, vl), out);
                        out.push(RootLoc::Exact(m));
                        split(chain, f, (rho, vr), (b, vb), out);
                        return;
                    }
                }
                delta /= &two;
            }
        }
    }
}

/// Multiplicity of the root located at `loc` in the polynomial with Yun
/// decomposition `factors`. The location must come from isolating a multiple
/// of every factor, so each factor has at most one root there.
fn multiplicity_at(factors: &[(ExactPoly, usize)], loc: &RootLoc) -> usize {
    factors
        .iter()
        .filter(|(p, _)| match loc {
            RootLoc::Exact(r) => p.eval_rat(r).is_zero(),
            RootLoc::Open(a, b) => {
                let chain = sturm_chain(p);
                let n = sign_variations(&chain, a) - sign_variations(&chain, b);
                debug_assert!(n <= 1, "isolated interval holds one root");
                n == 1
            }
        })
        .map(|(_, e)| e)
        .sum()
}

/// Whether `g` interlaces `f`: with roots of `f` as `u_1 >= u_2 >= ...` and
/// roots of `g` as `v_1 >= v_2 >= ...` (with multiplicity), either
/// `deg f = deg g + 1` and `u_1 >= v_1 >= u_2 >= ... >= v_{d-1} >= u_d`, or
/// `deg f = deg g` and `u_1 >= v_1 >= u_2 >= ... >= u_d >= v_d`. Nonzero
/// constants interlace in either position. Errors: `ZeroPolynomial` if either
/// argument is zero, `NotRealRooted` if either has a non-real root.
pub fn interlaces(g: &ExactPoly, f: &ExactPoly) -> Result<bool> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !is_real_rooted(f)? || !is_real_rooted(g)? {
        return Err(Error::NotRealRooted);
    }
    let p = f.degree().expect("nonzero");
    let q = g.degree().expect("nonzero");
    if p == 0 || q == 0 {
        return Ok(true);
    }
    if p != q && p != q + 1 {
        return Ok(false);
    }
    let locs = isolate_roots(&f.mul(g).squarefree_part());
    let (yf, yg) = (f.yun(), g.yun());
    // Ranks ascend as roots descend: rank 0 is the largest root.
    let mut u = Vec::with_capacity(p);
    let mut v = Vec::with_capacity(q);
    for (rank, loc) in locs.iter().rev().enumerate() {
        u.extend(std::iter::repeat(rank).take(multiplicity_at(&yf, loc)));
        v.extend(std::iter::repeat(rank).take(multiplicity_at(&yg, loc)));
    }
    assert_eq!(u.len(), p, "real-rooted: multiplicities fill the degree");
    assert_eq!(v.len(), q, "real-rooted: multiplicities fill the degree");
    // u_i >= v_i throughout, and v_i >= u_{i+1} wherever u continues.
    let down = (0..q).all(|i| u[i] <= v[i]);
    let up = (0..q.min(p - 1)).all(|i| v[i] <= u[i + 1]);
    Ok(down && up)
}

/// Whether `f` and `g` have identical root sets (ignoring multiplicity).
/// Errors with `ZeroPolynomial` if either argument is zero.
pub fn same_root_set(f: &ExactPoly, g: &ExactPoly) -> Result<bool> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.squarefree_part() == g.squarefree_part())
}
