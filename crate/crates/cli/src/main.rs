//! Command line front end for the dyckpeaks library: table regeneration,
//! single counts, series dumps, bijection traces, cross-check suites,
//! polynomial analysis, and conjecture sweeps.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use dyckpeaks::bijection::symmetry_bijection;
use dyckpeaks::conjectures::{
    check_realroot_characterization, check_sturm_sequence, check_sturm_unimodal,
    check_w2k_formulas, ConjectureReport,
};
use dyckpeaks::count::{binomial, w_formula, w_formula_multi, w_identities};
use dyckpeaks::dyck::DyckWord;
use dyckpeaks::necklace::MarkedNecklace;
use dyckpeaks::poly::{hadamard, w_poly, ExactPoly};
use dyckpeaks::realroot::is_real_rooted;
use dyckpeaks::series::solve_functional_equation;
use dyckpeaks::symmetric::{gamma_expansion, symmetric_decomposition, SignPattern};
use dyckpeaks::trees::{leaf_stats, phi, phi_inv, PlaneTree};
use dyckpeaks::verify::{run_suite, CheckResult, SuiteResult, SUITES};

/// Default seed for the randomized spot checks of `verify`.
const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(
    name = "dyckpeaks",
    version,
    about = "Exact counts, bijections, and polynomial analysis for peak statistics of Dyck paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the nonzero joint counts as CSV with columns n,k,m,w.
    ///
    /// Row (n, k, m) counts Dyck words of semilength n with k UD-factors and
    /// m UUD-factors; rows are sorted by (n, k, m).
    Table {
        /// Largest semilength to include.
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print one count, a row of counts, or a run-length count.
    Count {
        /// Semilength.
        #[arg(long)]
        n: u32,
        /// Number of UD-factors; omit to list every nonzero (k, m) pair.
        #[arg(long)]
        k: Option<u32>,
        /// Number of UUD-factors; omit to list the whole row over m.
        #[arg(long, requires = "k")]
        m: Option<u32>,
        /// Comma-separated factor counts k1,k2,...: words with ki occurrences
        /// of the factor U^iD for every i. Excludes --k/--m.
        #[arg(long, conflicts_with_all = ["k", "m"], value_delimiter = ',')]
        factors: Option<Vec<u32>>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump nonzero generating-series coefficients as CSV sorted by (n,k,m).
    ///
    /// The series is the fixed point of the defining quadratic relation,
    /// truncated past the given order in the semilength variable.
    Series {
        /// Truncation order.
        #[arg(long)]
        order: u32,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Trace the peak-complementing tree bijection as JSON.
    ///
    /// INPUT is a plane tree in balanced-parenthesis form or a Dyck word over
    /// {U, D}; omitted, it is read from stdin. The tree must have k leaves
    /// and 2k+1 non-root vertices for some k.
    Bijection {
        /// Tree or Dyck word; stdin when omitted.
        input: Option<String>,
        /// Expected leaf count, checked against the input when given.
        #[arg(long)]
        k: Option<usize>,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run cross-check suites; exit 1 if any check fails.
    ///
    /// Each invocation ends with spot checks of the closed-form identities
    /// at seeded random large parameters.
    Verify {
        /// Suite to run: oracle, bijections, identities, series, polys, all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Seed for the randomized spot checks.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze one row polynomial as JSON: coefficients, real-rootedness,
    /// gamma vector when symmetric, and the symmetric decomposition.
    Polys {
        /// Semilength.
        #[arg(long)]
        n: u32,
        /// Number of UD-factors.
        #[arg(long)]
        k: u32,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep one conjecture and write its JSON report.
    ///
    /// Ranges: id 1 interlaces consecutive rows for k <= min(6, max-1) and
    /// n <= max; id 2 checks Sturm unimodality of row sequences for n <= max;
    /// id 3 checks the real-rootedness characterization for n <= max; id 4
    /// checks the central-column closed forms for k <= max. The exit code is
    /// 0 whenever the sweep completes; verdicts live in the report.
    Conjectures {
        /// Conjecture id, 1 through 4.
        #[arg(long)]
        id: u32,
        /// Sweep bound; see the per-id ranges above.
        #[arg(long)]
        max: u32,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

enum CliError {
    /// A cross-check failed; exit 1.
    Failed(String),
    /// Bad arguments or malformed input; exit 2.
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Table { n_max, out } => emit(&out, &cmd_table(n_max)),
        Command::Count { n, k, m, factors, format, out } => {
            emit(&out, &cmd_count(n, k, m, factors.as_deref(), format)?)
        }
        Command::Series { order, out } => emit(&out, &cmd_series(order)),
        Command::Bijection { input, k, out } => emit(&out, &cmd_bijection(input, k)?),
        Command::Verify { suite, format, seed, out } => {
            let (content, all_passed) = cmd_verify(&suite, format, seed)?;
            emit(&out, &content)?;
            if all_passed {
                Ok(())
            } else {
                Err(CliError::Failed("verification failed".into()))
            }
        }
        Command::Polys { n, k, out } => emit(&out, &cmd_polys(n, k)?),
        Command::Conjectures { id, max, out } => emit(&out, &cmd_conjectures(id, max)?),
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_table(n_max: u32) -> String {
    let mut buf = String::from("n,k,m,w\n");
    for n in 0..=n_max {
        for k in 0..=n {
            for m in 0..=k {
                let w = w_formula(n, k, m);
                if w != BigInt::default() {
                    buf.push_str(&format!("{n},{k},{m},{w}\n"));
                }
            }
        }
    }
    buf
}

fn cmd_count(
    n: u32,
    k: Option<u32>,
    m: Option<u32>,
    factors: Option<&[u32]>,
    format: Format,
) -> CliResult<String> {
    if let Some(ks) = factors {
        if ks.is_empty() {
            return Err(usage("--factors needs at least one count"));
        }
        let w = w_formula_multi(n, ks);
        return Ok(match format {
            Format::Text => format!("{w}\n"),
            Format::Json => pretty(&json!({
                "n": n,
                "factors": ks,
                "w": w.to_string(),
            })),
            Format::Csv => return Err(usage("--factors has no CSV form; use text or json")),
        });
    }

    if let (Some(k), Some(m)) = (k, m) {
        let w = w_formula(n, k, m);
        return Ok(match format {
            Format::Text => format!("{w}\n"),
            Format::Csv => format!("n,k,m,w\n{n},{k},{m},{w}\n"),
            Format::Json => pretty(&json!({
                "n": n, "k": k, "m": m, "w": w.to_string(),
            })),
        });
    }

    // Row listings: fixed k over m, or everything for this n.
    let ks: Vec<u32> = match k {
        Some(k) => vec![k],
        None => (0..=n).collect(),
    };
    let mut rows = Vec::new();
    for k in ks {
        for m in 0..=k {
            let w = w_formula(n, k, m);
            if w != BigInt::default() {
                rows.push((k, m, w));
            }
        }
    }
    Ok(match format {
        Format::Text | Format::Csv => {
            let mut buf = String::from("n,k,m,w\n");
            for (k, m, w) in rows {
                buf.push_str(&format!("{n},{k},{m},{w}\n"));
            }
            buf
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|(k, m, w)| json!({"k": k, "m": m, "w": w.to_string()}))
                .collect();
            pretty(&json!({"n": n, "counts": items}))
        }
    })
}

fn cmd_series(order: u32) -> String {
    let series = solve_functional_equation(order);
    let mut buf = String::from("n,k,m,coeff\n");
    for (&(n, k, m), c) in series.terms() {
        if *c != BigInt::default() {
            buf.push_str(&format!("{n},{k},{m},{c}\n"));
        }
    }
    buf
}

fn necklace_json(neck: &MarkedNecklace) -> Value {
    json!({
        "lengths": neck.lengths(),
        "marks": neck.marks().collect::<Vec<usize>>(),
        "display": neck.to_string(),
    })
}

fn cmd_bijection(input: Option<String>, k: Option<usize>) -> CliResult<String> {
    let raw = match input {
        Some(text) => text,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    let raw = raw.trim();
    if raw.is_empty() {
        return Err(usage("empty input; pass a plane tree such as (()()) or a Dyck word"));
    }

    let tree = if raw.starts_with('(') {
        PlaneTree::parse(raw).map_err(|e| usage(e.to_string()))?
    } else {
        let word = DyckWord::parse(raw).map_err(|e| usage(e.to_string()))?;
        phi(&word)
    };

    let (leaves, good) = leaf_stats(&tree);
    if let Some(k) = k {
        if leaves != k {
            return Err(usage(format!("tree has {leaves} leaves, --k says {k}")));
        }
    }
    if tree.non_root_vertices() != 2 * leaves + 1 {
        return Err(usage(format!(
            "tree has {} leaves so it needs {} non-root vertices, found {}",
            leaves,
            2 * leaves + 1,
            tree.non_root_vertices()
        )));
    }

    let trace = symmetry_bijection(&tree).map_err(|e| usage(e.to_string()))?;
    let (out_leaves, out_good) = leaf_stats(&trace.output);
    Ok(pretty(&json!({
        "input_tree": trace.input.to_string(),
        "input_word": phi_inv(&trace.input).to_string(),
        "statistics": {
            "leaves": leaves,
            "good_leaves": good,
            "output_good_leaves": out_good,
        },
        "marked_necklace": necklace_json(&trace.necklace),
        "word": trace.word.to_string(),
        "swapped_word": trace.swapped.to_string(),
        "image_marked_necklace": necklace_json(&trace.image_necklace),
        "output_tree": trace.output.to_string(),
        "output_word": phi_inv(&trace.output).to_string(),
        "output_leaves": out_leaves,
    })))
}

fn cmd_verify(suite: &str, format: Format, seed: u64) -> CliResult<(String, bool)> {
    let mut results: Vec<SuiteResult> = if suite == "all" {
        SUITES
            .iter()
            .map(|s| run_suite(s).expect("known name"))
            .collect()
    } else {
        vec![run_suite(suite).map_err(|e| usage(e.to_string()))?]
    };
    results.push(seeded_spot_checks(seed));

    let all_passed = results.iter().all(SuiteResult::passed);
    let total: usize = results.iter().map(|s| s.checks.len()).sum();
    let failed: usize = results
        .iter()
        .flat_map(|s| &s.checks)
        .filter(|c| !c.passed)
        .count();

    let content = match format {
        Format::Text => {
            let mut buf = String::new();
            for suite in &results {
                for c in &suite.checks {
                    if c.passed {
                        buf.push_str(&format!("ok   {} :: {}\n", suite.suite, c.label));
                    } else {
                        let detail = c.detail.as_deref().unwrap_or("no detail");
                        buf.push_str(&format!("FAIL {} :: {}: {detail}\n", suite.suite, c.label));
                    }
                }
            }
            if all_passed {
                buf.push_str(&format!("all {total} checks passed\n"));
            } else {
                buf.push_str(&format!("{failed} of {total} checks failed\n"));
            }
            buf
        }
        Format::Json => {
            let suites: Vec<Value> = results
                .iter()
                .map(|s| {
                    let checks: Vec<Value> = s
                        .checks
                        .iter()
                        .map(|c| {
                            json!({
                                "label": c.label,
                                "passed": c.passed,
                                "detail": c.detail,
                            })
                        })
                        .collect();
                    json!({"suite": s.suite, "passed": s.passed(), "checks": checks})
                })
                .collect();
            pretty(&json!({"passed": all_passed, "seed": seed, "suites": suites}))
        }
        Format::Csv => return Err(usage("verify has no CSV form; use text or json")),
    };
    Ok((content, all_passed))
}

/// Spot checks of the closed-form identities at random parameters beyond
/// enumeration reach, all exact.
fn seeded_spot_checks(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let mut push = |label: &str, outcome: Result<(), String>| {
        checks.push(CheckResult {
            label: label.to_string(),
            passed: outcome.is_ok(),
            detail: outcome.err(),
        });
    };

    push("reflection ratio at 64 random points (n <= 300)", {
        let mut res = Ok(());
        for _ in 0..64 {
            let n = rng.gen_range(2u32..=300);
            let k = rng.gen_range(1..n);
            let m = rng.gen_range(0..=k.min(n - k));
            let lhs = w_formula(n, k, m)
                * BigInt::from((n - k) as u64 * (n - k + 1) as u64);
            let rhs = w_formula(n, n - k, m) * BigInt::from(k as u64 * (k + 1) as u64);
            if lhs != rhs {
                res = Err(format!("n={n} k={k} m={m}"));
                break;
            }
        }
        res
    });

    push("peak-count reductions at 64 random points (k <= 80)", {
        let mut res = Ok(());
        for _ in 0..64 {
            let k = rng.gen_range(1u32..=80);
            let j = rng.gen_range(1u32..=8);
            let m = rng.gen_range(0..=k + 1);
            let ids = w_identities(k, m, j);
            let minus_holds = ids.minus.map_or(true, |p| p.holds());
            if !ids.plus.holds() || !minus_holds {
                res = Err(format!("k={k} m={m} j={j}"));
                break;
            }
        }
        res
    });

    push("coefficientwise product route at 24 random rows (n <= 40)", {
        let t = ExactPoly::from_i64(&[0, 1]);
        let one_plus_t = ExactPoly::from_i64(&[1, 1]);
        let mut res = Ok(());
        for _ in 0..24 {
            let n = rng.gen_range(2u32..=40);
            let k = rng.gen_range(1..n);
            let f = t.mul(&one_plus_t.pow((n - k - 1) as usize));
            let g = one_plus_t.pow(k as usize);
            let rhs = hadamard(&f, &g).scale(&binomial(n as i64, k as i64 - 1));
            if w_poly(n, k).scale(&BigInt::from(k)) != rhs {
                res = Err(format!("n={n} k={k}"));
                break;
            }
        }
        res
    });

    SuiteResult { suite: "random".into(), checks }
}

fn bigints_json(cs: &[BigInt]) -> Value {
    Value::Array(cs.iter().map(|c| Value::String(c.to_string())).collect())
}

fn cmd_polys(n: u32, k: u32) -> CliResult<String> {
    let f = w_poly(n, k);

    let real_rooted = if f.is_zero() {
        Value::Null
    } else {
        Value::Bool(is_real_rooted(&f).map_err(|e| CliError::Failed(e.to_string()))?)
    };

    // Symmetry frame: lowest nonzero exponent plus degree. The expansion
    // exists exactly when the coefficients are palindromic in that window.
    let gamma = match f.coeffs().iter().position(|c| *c != BigInt::default()) {
        Some(low) => {
            let frame = low + f.degree().expect("nonzero polynomial has a degree");
            match gamma_expansion(&f, frame) {
                Ok(g) => json!({
                    "center": g.center,
                    "gammas": bigints_json(&g.gammas),
                }),
                Err(_) => Value::Null,
            }
        }
        None => Value::Null,
    };

    let decomposition = if (1..=n).contains(&k) {
        let d = symmetric_decomposition(n, k).map_err(|e| CliError::Failed(e.to_string()))?;
        let (pattern, form) = match d.pattern {
            SignPattern::PlusMinusT => ("plus_minus_t", "W = W+ - t W-"),
            SignPattern::PlusPlusT => ("plus_plus_t", "W = W+ + t W-"),
            SignPattern::MinusPlusT => ("minus_plus_t", "W = -W+ + t W-"),
        };
        json!({
            "pattern": pattern,
            "form": form,
            "plus": bigints_json(d.plus.coeffs()),
            "minus": bigints_json(d.minus.coeffs()),
        })
    } else {
        Value::Null
    };

    Ok(pretty(&json!({
        "n": n,
        "k": k,
        "coefficients": bigints_json(f.coeffs()),
        "degree": f.degree(),
        "real_rooted": real_rooted,
        "gamma": gamma,
        "decomposition": decomposition,
    })))
}

fn cmd_conjectures(id: u32, max: u32) -> CliResult<String> {
    let report: ConjectureReport = match id {
        1 => {
            let k_max = max.saturating_sub(1).min(6);
            check_sturm_sequence(k_max, max)
        }
        2 => check_sturm_unimodal(max),
        3 => check_realroot_characterization(max),
        4 => check_w2k_formulas(max),
        other => return Err(usage(format!("unknown conjecture id {other}; use 1 through 4"))),
    }
    .map_err(|e| usage(e.to_string()))?;
    Ok(format!("{}\n", serde_json::to_string_pretty(&report).expect("report serializes")))
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json serializes"))
}
