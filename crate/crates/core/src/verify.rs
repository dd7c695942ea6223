//! Named cross-check suites. Each check re-derives a family of facts along
//! two independent routes and reports the first disagreement instead of
//! panicking, so a front end can print one line per check.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::bijection::symmetry_bijection;
use crate::composition::enumerate_cyclic_classes;
use crate::count::{
    binomial, catalan, catalan_via_primitive, ccomp_count, w_formula, w_formula_multi,
    w_identities, CcompVariant,
};
use crate::dyck::enumerate_dyck;
use crate::necklace::{
    comp_from_dyck_minus, comp_from_dyck_plus, comp_to_dyck_minus, comp_to_dyck_plus,
    enumerate_markings, marked_class_count, marked_necklace_from_tree, tree_from_marked_necklace,
};
use crate::oracle::{oracle_table, oracle_table_multi};
use crate::poly::{gen_narayana_poly, hadamard, w_poly, ExactPoly};
use crate::realroot::is_real_rooted;
use crate::series::{residual, series_from_formula, solve_functional_equation};
use crate::symmetric::{gamma_expansion, symmetric_decomposition, SignPattern};
use crate::trees::{enumerate_trees, extended_leaf_decomposition, leaf_stats, phi, phi_inv};
use crate::{Error, Result};

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub label: String,
    pub passed: bool,
    /// First counterexample found, when failing.
    pub detail: Option<String>,
}

/// All checks of one suite.
#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// The suites [`run_suite`] knows, in execution order of `run_all`.
pub const SUITES: [&str; 5] = ["oracle", "bijections", "identities", "series", "polys"];

fn check(
    label: &str,
    body: impl FnOnce() -> std::result::Result<(), String>,
) -> CheckResult {
    let (passed, detail) = match body() {
        Ok(()) => (true, None),
        Err(d) => (false, Some(d)),
    };
    CheckResult { label: label.to_string(), passed, detail }
}

/// Closed-form counts against direct path enumeration.
pub fn verify_oracle() -> SuiteResult {
    let mut checks = Vec::new();

    checks.push(check("product formula equals enumerated counts (n <= 10)", || {
        for n in 0..=10usize {
            let table = oracle_table(n);
            for k in 0..=n {
                for m in 0..=k {
                    let counted = table.get(&(k, m)).cloned().unwrap_or_default();
                    let formula = w_formula(n as u32, k as u32, m as u32);
                    if counted != formula {
                        return Err(format!(
                            "n={n} k={k} m={m}: enumerated {counted}, formula {formula}"
                        ));
                    }
                }
            }
        }
        Ok(())
    }));

    checks.push(check(
        "run-length formula equals enumerated counts (n <= 8, r <= 3)",
        || {
            for n in 0..=8usize {
                for r in 1..=3usize {
                    let table = oracle_table_multi(n, r);
                    let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
                    for _ in 0..r {
                        tuples = tuples
                            .into_iter()
                            .flat_map(|t| {
                                let hi = t.last().copied().unwrap_or(n);
                                (0..=hi).map(move |k| {
                                    let mut t = t.clone();
                                    t.push(k);
                                    t
                                })
                            })
                            .collect();
                    }
                    for ks in tuples {
                        let counted = table.get(&ks).cloned().unwrap_or_default();
                        let ks32: Vec<u32> = ks.iter().map(|&k| k as u32).collect();
                        let formula = w_formula_multi(n as u32, &ks32);
                        if counted != formula {
                            return Err(format!(
                                "n={n} ks={ks:?}: enumerated {counted}, formula {formula}"
                            ));
                        }
                    }
                }
            }
            Ok(())
        },
    ));

    SuiteResult { suite: "oracle".into(), checks }
}

/// Tree encodings, necklace maps, and the symmetry involution.
pub fn verify_bijections() -> SuiteResult {
    let mut checks = Vec::new();

    checks.push(check(
        "word-tree encoding round trips and carries both statistics (n <= 8)",
        || {
            for n in 0..=8usize {
                for w in enumerate_dyck(n) {
                    let t = phi(&w);
                    if phi_inv(&t) != w {
                        return Err(format!("round trip failed for {w}"));
                    }
                    let (leaves, good) = leaf_stats(&t);
                    if (leaves, good) != (w.count_factor(1), w.count_factor(2)) {
                        return Err(format!("statistics differ for {w}"));
                    }
                }
            }
            Ok(())
        },
    ));

    checks.push(check("leaf chains partition the edges (n <= 8)", || {
        for n in 1..=8usize {
            for w in enumerate_dyck(n) {
                let t = phi(&w);
                let seq = extended_leaf_decomposition(&t).map_err(|e| e.to_string())?;
                if seq.lengths.iter().sum::<usize>() != n {
                    return Err(format!("lengths do not sum to edge count for {w}"));
                }
                let good = seq.lengths.iter().filter(|&&l| l >= 2).count();
                if good != w.count_factor(2) {
                    return Err(format!("long-chain count differs for {w}"));
                }
            }
        }
        Ok(())
    }));

    checks.push(check(
        "odd-sum classes biject with words one size down, keeping big parts (k <= 6)",
        || {
            for k in 1..=6usize {
                let mut images = BTreeSet::new();
                let mut total = 0usize;
                for m in 0..=k {
                    for class in enumerate_cyclic_classes(2 * k + 1, k, m) {
                        let w = comp_to_dyck_plus(&class).map_err(|e| e.to_string())?;
                        if w.semilength() != k || w.count_factor(1) != m {
                            return Err(format!("image mismatch for {class}"));
                        }
                        let back = comp_from_dyck_plus(&w).map_err(|e| e.to_string())?;
                        if crate::composition::cyclic_of(&back) != class {
                            return Err(format!("round trip failed for {class}"));
                        }
                        images.insert(w);
                        total += 1;
                    }
                }
                if images.len() != total || BigInt::from(total) != catalan(k as u32) {
                    return Err(format!("class count mismatch at k={k}"));
                }
            }
            Ok(())
        },
    ));

    checks.push(check(
        "short-sum classes biject with words one size down, keeping big parts (k <= 6)",
        || {
            for k in 1..=6usize {
                let mut images = BTreeSet::new();
                let mut total = 0usize;
                for m in 0..=k {
                    for class in enumerate_cyclic_classes(2 * k - 1, k, m) {
                        let w = comp_to_dyck_minus(&class).map_err(|e| e.to_string())?;
                        if w.semilength() != k - 1 || w.count_factor(1) != m {
                            return Err(format!("image mismatch for {class}"));
                        }
                        let back = comp_from_dyck_minus(&w);
                        if crate::composition::cyclic_of(&back) != class {
                            return Err(format!("round trip failed for {class}"));
                        }
                        images.insert(w);
                        total += 1;
                    }
                }
                if images.len() != total || BigInt::from(total) != catalan(k as u32 - 1) {
                    return Err(format!("class count mismatch at k={k}"));
                }
            }
            Ok(())
        },
    ));

    checks.push(check(
        "every marking fiber has the same binomial size (k <= 5)",
        || {
            for k in 1..=5usize {
                let expected = binomial(2 * k as i64 + 1, k as i64 - 1);
                for m in 0..=k {
                    for class in enumerate_cyclic_classes(2 * k + 1, k, m) {
                        let markings =
                            enumerate_markings(class.canonical()).map_err(|e| e.to_string())?;
                        if BigInt::from(markings.len()) != expected {
                            return Err(format!("fiber size mismatch for {class}"));
                        }
                    }
                }
            }
            Ok(())
        },
    ));

    checks.push(check(
        "marking counts match the rise-composition grouping (n <= 10)",
        || {
            for n in 1..=10usize {
                let mut by_class: std::collections::BTreeMap<_, usize> =
                    std::collections::BTreeMap::new();
                for w in enumerate_dyck(n) {
                    let rise = w.rise_composition().map_err(|e| e.to_string())?;
                    *by_class.entry(crate::composition::cyclic_of(&rise)).or_default() += 1;
                }
                for class in crate::composition::enumerate_all_cyclic_classes(n) {
                    let k = class.num_parts();
                    let closed = class.order() * binomial(n as i64, k as i64 - 1)
                        / BigInt::from(k);
                    let counted = marked_class_count(&class);
                    if BigInt::from(counted) != closed {
                        return Err(format!("closed count differs for {class}"));
                    }
                    if by_class.get(&class) != Some(&counted) {
                        return Err(format!("word grouping differs for {class}"));
                    }
                }
            }
            Ok(())
        },
    ));

    checks.push(check(
        "marked necklaces round trip through trees (k <= 4)",
        || {
            let mut count = 0usize;
            for k in 1..=4usize {
                for m in 0..=k {
                    for class in enumerate_cyclic_classes(2 * k + 1, k, m) {
                        for neck in enumerate_markings(class.canonical()).map_err(|e| e.to_string())?
                        {
                            let tree = tree_from_marked_necklace(&neck);
                            let back =
                                marked_necklace_from_tree(&tree).map_err(|e| e.to_string())?;
                            if back != neck {
                                return Err(format!("round trip failed for {neck}"));
                            }
                            count += 1;
                        }
                    }
                }
            }
            // Every marked necklace was hit and none collided.
            if count == 0 {
                return Err("empty sweep".into());
            }
            Ok(())
        },
    ));

    checks.push(check(
        "tree symmetry involutes and complements good leaves (k <= 4)",
        || {
            for k in 1..=4usize {
                let mut seen = BTreeSet::new();
                let mut total = 0usize;
                for tree in enumerate_trees(2 * k + 1) {
                    let (leaves, good) = leaf_stats(&tree);
                    if leaves != k {
                        continue;
                    }
                    let trace = symmetry_bijection(&tree).map_err(|e| e.to_string())?;
                    let (out_leaves, out_good) = leaf_stats(&trace.output);
                    if out_leaves != leaves || out_good != leaves + 1 - good {
                        return Err(format!("statistics wrong for {tree}"));
                    }
                    let back = symmetry_bijection(&trace.output).map_err(|e| e.to_string())?;
                    if back.output != tree {
                        return Err(format!("not an involution on {tree}"));
                    }
                    seen.insert(trace.output.to_string());
                    total += 1;
                }
                if seen.len() != total {
                    return Err(format!("images collide at k={k}"));
                }
            }
            Ok(())
        },
    ));

    SuiteResult { suite: "bijections".into(), checks }
}

/// Closed-form identities among the counting formulas.
pub fn verify_identities() -> SuiteResult {
    let mut checks = Vec::new();

    checks.push(check(
        "peak counts reduce to generalized Narayana numbers (k <= 8, j <= 6)",
        || {
            for k in 1..=8u32 {
                for j in 1..=6u32 {
                    for m in 0..=k + 1 {
                        let ids = w_identities(k, m, j);
                        if !ids.plus.holds() {
                            return Err(format!("plus identity fails at k={k} m={m} j={j}"));
                        }
                        if let Some(minus) = ids.minus {
                            if !minus.holds() {
                                return Err(format!("minus identity fails at k={k} m={m} j={j}"));
                            }
                        }
                    }
                }
            }
            Ok(())
        },
    ));

    checks.push(check(
        "divisor sums count cyclic classes (k <= 6)",
        || {
            for k in 1..=6u32 {
                for m in 0..=k {
                    for j in 1..=4u32 {
                        let direct =
                            enumerate_cyclic_classes((2 * k + j) as usize, k as usize, m as usize)
                                .len();
                        if ccomp_count(k, m, j, CcompVariant::Plus) != BigInt::from(direct) {
                            return Err(format!("plus count differs at k={k} m={m} j={j}"));
                        }
                    }
                    for j in 1..=k {
                        let direct =
                            enumerate_cyclic_classes((2 * k - j) as usize, k as usize, m as usize)
                                .len();
                        if ccomp_count(k, m, j, CcompVariant::Minus) != BigInt::from(direct) {
                            return Err(format!("minus count differs at k={k} m={m} j={j}"));
                        }
                    }
                    let direct =
                        enumerate_cyclic_classes(2 * k as usize, k as usize, m as usize).len();
                    if ccomp_count(k, m, 0, CcompVariant::Zero) != BigInt::from(direct) {
                        return Err(format!("balanced count differs at k={k} m={m}"));
                    }
                }
            }
            Ok(())
        },
    ));

    checks.push(check("primitive-class double sum gives Catalan (n <= 12)", || {
        for n in 1..=12u32 {
            let via = catalan_via_primitive(n).map_err(|e| e.to_string())?;
            if via != catalan(n) {
                return Err(format!("mismatch at n={n}"));
            }
        }
        Ok(())
    }));

    checks.push(check("reflection ratio relates k and n-k rows (n <= 12)", || {
        for n in 2..=12u32 {
            for k in 1..n {
                for m in 0..=k.min(n - k) {
                    let lhs = w_formula(n, k, m)
                        * BigInt::from((n - k) as i64)
                        * BigInt::from((n - k + 1) as i64);
                    let rhs = w_formula(n, n - k, m)
                        * BigInt::from(k as i64)
                        * BigInt::from((k + 1) as i64);
                    if lhs != rhs {
                        return Err(format!("mismatch at n={n} k={k} m={m}"));
                    }
                }
            }
        }
        Ok(())
    }));

    SuiteResult { suite: "identities".into(), checks }
}

/// The trivariate generating series against its defining relation.
pub fn verify_series() -> SuiteResult {
    let mut checks = Vec::new();
    let order = 10;

    checks.push(check("fixed point equals formula-built series (order 10)", || {
        if solve_functional_equation(order) != series_from_formula(order) {
            return Err("series differ".into());
        }
        Ok(())
    }));

    checks.push(check("defining relation residual vanishes (order 10)", || {
        for (name, s) in [
            ("fixed point", solve_functional_equation(order)),
            ("formula", series_from_formula(order)),
        ] {
            let r = residual(&s).map_err(|e| e.to_string())?;
            if !r.is_zero() {
                return Err(format!("{name} series leaves a residual"));
            }
        }
        Ok(())
    }));

    SuiteResult { suite: "series".into(), checks }
}

/// Polynomial constructions, real-rootedness, and the decomposition.
pub fn verify_polys() -> SuiteResult {
    let mut checks = Vec::new();

    checks.push(check(
        "coefficientwise product route matches the rows (n <= 12)",
        || {
            let t = ExactPoly::from_i64(&[0, 1]);
            let one_plus_t = ExactPoly::from_i64(&[1, 1]);
            for n in 1..=12u32 {
                for k in 1..n {
                    let f = t.mul(&one_plus_t.pow((n - k - 1) as usize));
                    let g = one_plus_t.pow(k as usize);
                    let rhs = hadamard(&f, &g).scale(&binomial(n as i64, k as i64 - 1));
                    if w_poly(n, k).scale(&BigInt::from(k)) != rhs {
                        return Err(format!("mismatch at n={n} k={k}"));
                    }
                }
            }
            Ok(())
        },
    ));

    checks.push(check("generalized Narayana reductions (k, j <= 6)", || {
        for k in 1..=6u32 {
            for j in 1..=6u32 {
                let n = 2 * k + j;
                let lhs = w_poly(n, k).scale(&BigInt::from(j));
                let rhs =
                    gen_narayana_poly(k + j - 1, j - 1).scale(&binomial(n as i64, k as i64 - 1));
                if lhs != rhs {
                    return Err(format!("plus reduction fails at k={k} j={j}"));
                }
            }
            for j in 1..=k {
                let n = 2 * k - j;
                let lhs = w_poly(n, k).scale(&BigInt::from(j));
                let rhs = gen_narayana_poly(k - 1, j - 1).scale(&binomial(n as i64, k as i64 - 1));
                if lhs != rhs {
                    return Err(format!("minus reduction fails at k={k} j={j}"));
                }
            }
        }
        Ok(())
    }));

    checks.push(check("central column has the product form (k <= 8)", || {
        for k in 1..=8i64 {
            let rhs = ExactPoly::new(
                (0..=k)
                    .map(|m| binomial(k - 1, m - 1) * binomial(k, m))
                    .collect::<Vec<BigInt>>(),
            )
            .scale(&catalan(k as u32));
            if w_poly(2 * k as u32, k as u32) != rhs {
                return Err(format!("mismatch at k={k}"));
            }
        }
        Ok(())
    }));

    checks.push(check("row polynomials are real-rooted (n <= 12)", || {
        for n in 0..=12u32 {
            for k in 0..=n {
                let f = w_poly(n, k);
                if f.is_zero() {
                    continue;
                }
                match is_real_rooted(&f) {
                    Ok(true) => {}
                    Ok(false) => return Err(format!("not real-rooted at n={n} k={k}")),
                    Err(e) => return Err(e.to_string()),
                }
            }
        }
        Ok(())
    }));

    checks.push(check(
        "the two symmetric bands are gamma-nonnegative (k <= 8)",
        || {
            for k in 1..=8u32 {
                let g = gamma_expansion(&w_poly(2 * k + 1, k), k as usize + 1)
                    .map_err(|e| e.to_string())?;
                if !g.is_nonnegative() {
                    return Err(format!("negative gamma above center at k={k}"));
                }
                if k >= 2 {
                    let g = gamma_expansion(&w_poly(2 * k - 1, k), k as usize)
                        .map_err(|e| e.to_string())?;
                    if !g.is_nonnegative() {
                        return Err(format!("negative gamma below center at k={k}"));
                    }
                }
            }
            Ok(())
        },
    ));

    checks.push(check("symmetric decomposition reassembles (n <= 16)", || {
        for n in 1..=16u32 {
            for k in 1..=n {
                let d = symmetric_decomposition(n, k).map_err(|e| e.to_string())?;
                let t_minus = d.minus.mul_xpow(1);
                let rebuilt = match d.pattern {
                    SignPattern::PlusMinusT => d.plus.sub(&t_minus),
                    SignPattern::PlusPlusT => d.plus.add(&t_minus),
                    SignPattern::MinusPlusT => t_minus.sub(&d.plus),
                };
                if rebuilt != w_poly(n, k) {
                    return Err(format!("reassembly fails at n={n} k={k}"));
                }
            }
        }
        Ok(())
    }));

    checks.push(check("reflection rescales rows coefficientwise (n <= 14)", || {
        for n in 2..=14u32 {
            for k in 1..n {
                let lhs = w_poly(n, k)
                    .scale(&BigInt::from((n - k) as i64 * (n - k + 1) as i64));
                let rhs = w_poly(n, n - k).scale(&BigInt::from(k as i64 * (k + 1) as i64));
                if lhs != rhs {
                    return Err(format!("mismatch at n={n} k={k}"));
                }
            }
        }
        Ok(())
    }));

    SuiteResult { suite: "polys".into(), checks }
}

/// Runs one suite by name.
pub fn run_suite(name: &str) -> Result<SuiteResult> {
    match name {
        "oracle" => Ok(verify_oracle()),
        "bijections" => Ok(verify_bijections()),
        "identities" => Ok(verify_identities()),
        "series" => Ok(verify_series()),
        "polys" => Ok(verify_polys()),
        _ => Err(Error::BadRange(format!(
            "unknown suite {name:?}; expected one of {SUITES:?} or \"all\""
        ))),
    }
}

/// Runs every suite in [`SUITES`] order.
pub fn run_all() -> Vec<SuiteResult> {
    SUITES.iter().map(|s| run_suite(s).expect("known name")).collect()
}
