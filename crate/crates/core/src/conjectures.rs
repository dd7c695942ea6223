//! Bounded numerical sweeps for the open questions about the
//! joint-statistic polynomials. Each sweep returns a report of per-case
//! verdicts; nothing here asserts that a conjecture is true.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::count::{binomial, catalan};
use crate::poly::{bar_narayana_poly, narayana_poly, w_poly, ExactPoly};
use crate::realroot::{interlaces, is_real_rooted};
use crate::symmetric::symmetric_decomposition;
use crate::{Error, Result};

/// Outcome of one checked instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub label: String,
    pub holds: bool,
}

/// Result of sweeping one conjecture over a bounded range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    /// 1 = interlacing down columns, 2 = unimodal interlacing across rows,
    /// 3 = real-rootedness characterization of the decomposition parts,
    /// 4 = closed forms for the central decomposition parts.
    pub id: u32,
    /// Human-readable description of the swept range.
    pub range: String,
    pub verdicts: Vec<Verdict>,
    /// Details for the first failing verdict, if any.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl ConjectureReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }
}

/// Conjecture 1: for each fixed `k`, the column `W_{k,k}, W_{k+1,k}, ...`
/// is a chain in which each polynomial interlaces the next. Sweeps
/// `1 <= k <= k_max` and `k <= n < n_max`.
pub fn check_sturm_sequence(k_max: u32, n_max: u32) -> Result<ConjectureReport> {
    if k_max < 1 || n_max <= k_max {
        return Err(Error::BadRange(format!(
            "need 1 <= k_max < n_max, got k_max={k_max} n_max={n_max}"
        )));
    }
    let mut verdicts = Vec::new();
    let mut counterexample = None;
    for k in 1..=k_max {
        let mut holds = true;
        for n in k..n_max {
            if !interlaces(&w_poly(n, k), &w_poly(n + 1, k))? {
                holds = false;
                if counterexample.is_none() {
                    counterexample =
                        Some(format!("W_{{{n},{k}}} does not interlace W_{{{},{k}}}", n + 1));
                }
                break;
            }
        }
        verdicts.push(Verdict { label: format!("k={k}"), holds });
    }
    Ok(ConjectureReport {
        id: 1,
        range: format!("k in 1..={k_max}, n in k..={n_max}"),
        verdicts,
        counterexample,
    })
}

/// Conjecture 2: for each fixed `n`, the row `W_{n,1}, ..., W_{n,n}` is
/// unimodal under interlacing: arrows point inward to some pivot `j`.
/// Sweeps `1 <= n <= n_max`.
pub fn check_sturm_unimodal(n_max: u32) -> Result<ConjectureReport> {
    if n_max < 1 {
        return Err(Error::BadRange("need n_max >= 1".into()));
    }
    let mut verdicts = Vec::new();
    let mut counterexample = None;
    for n in 1..=n_max {
        // forward[k] : W_{n,k} -> W_{n,k+1}; backward[k] : W_{n,k+1} -> W_{n,k}.
        let mut forward = Vec::new();
        let mut backward = Vec::new();
        for k in 1..n {
            forward.push(interlaces(&w_poly(n, k), &w_poly(n, k + 1))?);
            backward.push(interlaces(&w_poly(n, k + 1), &w_poly(n, k))?);
        }
        let pivot = (1..=n).find(|&j| {
            let head = (1..j).all(|k| forward[k as usize - 1]);
            let tail = (j..n).all(|k| backward[k as usize - 1]);
            head && tail
        });
        if pivot.is_none() && counterexample.is_none() {
            counterexample = Some(format!("no pivot for n={n}"));
        }
        verdicts.push(Verdict {
            label: match pivot {
                Some(j) => format!("n={n} pivot={j}"),
                None => format!("n={n}"),
            },
            holds: pivot.is_some(),
        });
    }
    Ok(ConjectureReport {
        id: 2,
        range: format!("n in 1..={n_max}"),
        verdicts,
        counterexample,
    })
}

/// A decomposition part counts as real-rooted when it is the zero
/// polynomial (no roots to be non-real) or passes the Sturm test.
fn part_real_rooted(f: &ExactPoly) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    is_real_rooted(f)
}

/// The claimed set of `k` for which both decomposition parts of `W_{n,k}`
/// are real-rooted, with entries outside `1..=n` dropped.
fn claimed_real_rooted_set(n: u32) -> BTreeSet<u32> {
    let mut s: BTreeSet<i64> = BTreeSet::new();
    let n_i = n as i64;
    let h = n_i / 2;
    if n <= 2 {
        s.insert(1);
    } else if n % 2 == 1 {
        s.extend([1, 2, h - 1, h, h + 1]);
        if n % 4 == 3 {
            s.insert(h + 2);
        }
    } else {
        s.extend([1, 2, h - 1, h, h + 1]);
        if n == 10 || n == 12 || n == 16 {
            s.insert(h - 2);
        }
    }
    s.into_iter()
        .filter(|&k| 1 <= k && k <= n_i)
        .map(|k| k as u32)
        .collect()
}

/// Conjecture 3: the five-case characterization of which `(n, k)` have both
/// decomposition parts real-rooted. Sweeps `1 <= n <= n_max`; each verdict
/// compares the claimed set of `k` with the computed one. The case
/// `n = 3` is a known literal failure: the claim lists `k = floor(n/2) + 2 = 3`,
/// but both parts of `W_{3,3}` contain the factor `1 + t + t^2`.
pub fn check_realroot_characterization(n_max: u32) -> Result<ConjectureReport> {
    if n_max < 1 {
        return Err(Error::BadRange("need n_max >= 1".into()));
    }
    let mut verdicts = Vec::new();
    let mut counterexample = None;
    for n in 1..=n_max {
        let mut actual = BTreeSet::new();
        for k in 1..=n {
            let d = symmetric_decomposition(n, k)?;
            if part_real_rooted(&d.plus)? && part_real_rooted(&d.minus)? {
                actual.insert(k);
            }
        }
        let claimed = claimed_real_rooted_set(n);
        let holds = claimed == actual;
        if !holds && counterexample.is_none() {
            counterexample = Some(format!("n={n}: claimed {claimed:?}, computed {actual:?}"));
        }
        verdicts.push(Verdict { label: format!("n={n}"), holds });
    }
    Ok(ConjectureReport {
        id: 3,
        range: format!("n in 1..={n_max}"),
        verdicts,
        counterexample,
    })
}

/// Conjecture 4: closed forms for decomposition parts in the band
/// `n = 2k`. Part (a) speaks about the unsigned parts of `W_{2k,k}`; part
/// (b) gives the unsigned minus part of `W_{2k,k+1}` and the raw signed
/// plus part of `W_{2k,k-1}` (which is nonpositive there, hence the signed
/// convention). Sweeps `1 <= k <= k_max`, needing `k_max >= 2` so part (b)
/// is exercised.
pub fn check_w2k_formulas(k_max: u32) -> Result<ConjectureReport> {
    if k_max < 2 {
        return Err(Error::BadRange(format!("need k_max >= 2, got {k_max}")));
    }
    let mut verdicts = Vec::new();
    let mut counterexample = None;
    let mut push = |label: String, holds: bool, counterexample: &mut Option<String>| {
        if !holds && counterexample.is_none() {
            *counterexample = Some(label.clone());
        }
        verdicts.push(Verdict { label, holds });
    };
    for k in 1..=k_max {
        let d = symmetric_decomposition(2 * k, k)?;
        let ck = catalan(k);
        let plus_rhs = narayana_poly(k - 1).scale(&(BigInt::from(k as i64 - 1) * &ck));
        push(
            format!("k={k} plus part of W_{{2k,k}} (unsigned)"),
            d.plus == plus_rhs,
            &mut counterexample,
        );
        let minus_rhs = ExactPoly::new(
            (0..k as i64)
                .map(|i| {
                    let b = binomial(k as i64 - 1, i);
                    &b * &b
                })
                .collect::<Vec<BigInt>>(),
        )
        .scale(&ck);
        push(
            format!("k={k} minus part of W_{{2k,k}} (unsigned)"),
            d.minus == minus_rhs,
            &mut counterexample,
        );
        if k < 2 {
            continue;
        }
        let d = symmetric_decomposition(2 * k, k + 1)?;
        let rhs = narayana_poly(k - 1).scale(&binomial(2 * k as i64, k as i64));
        push(
            format!("k={k} minus part of W_{{2k,k+1}} (unsigned)"),
            d.minus == rhs,
            &mut counterexample,
        );
        let d = symmetric_decomposition(2 * k, k - 1)?;
        let doubled = bar_narayana_poly(k - 2, 1)
            .scale(&binomial(2 * k as i64, k as i64 - 2))
            .mul_xpow(1);
        let holds = match doubled.div_exact(&ExactPoly::from_i64(&[2])) {
            Some(half) => d.plus_signed == half.neg(),
            None => false,
        };
        push(
            format!("k={k} plus part of W_{{2k,k-1}} (signed)"),
            holds,
            &mut counterexample,
        );
    }
    Ok(ConjectureReport {
        id: 4,
        range: format!("k in 1..={k_max}"),
        verdicts,
        counterexample,
    })
}
