//! End-to-end tests of the binary: output bytes, exit codes, JSON shapes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn dyckpeaks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyckpeaks"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json_stdout(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).expect("json output")
}

#[test]
fn table_matches_golden_file() {
    let out = dyckpeaks(&["table", "--n-max", "10"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), include_str!("golden/table_n10.csv"));
}

#[test]
fn table_small_cases() {
    let out = dyckpeaks(&["table", "--n-max", "0"]);
    assert_eq!(stdout(&out), "n,k,m,w\n0,0,0,1\n");

    let out = dyckpeaks(&["table", "--n-max", "2"]);
    assert_eq!(stdout(&out), "n,k,m,w\n0,0,0,1\n1,1,0,1\n2,1,1,1\n2,2,0,1\n");
}

#[test]
fn table_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = dyckpeaks(&["table", "--n-max", "10", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), include_str!("golden/table_n10.csv"));
}

#[test]
fn count_single_and_row() {
    let out = dyckpeaks(&["count", "--n", "5", "--k", "2", "--m", "1"]);
    assert_eq!(stdout(&out), "5\n");

    let out = dyckpeaks(&["count", "--n", "8", "--k", "4", "--m", "3", "--format", "json"]);
    assert_eq!(json_stdout(&out)["w"], "168");

    let out = dyckpeaks(&["count", "--n", "4", "--k", "2", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,k,m,w\n4,2,1,4\n4,2,2,2\n");

    // Whole-n listing agrees with the table rows for that n.
    let all = dyckpeaks(&["count", "--n", "3"]);
    assert_eq!(stdout(&all), "n,k,m,w\n3,1,1,1\n3,2,1,3\n3,3,0,1\n");
}

#[test]
fn count_run_length_factors() {
    let out = dyckpeaks(&["count", "--n", "6", "--factors", "2,1"]);
    let direct = dyckpeaks::count::w_formula_multi(6, &[2, 1]);
    assert_eq!(stdout(&out).trim(), direct.to_string());

    // --factors with --k is contradictory.
    let out = dyckpeaks(&["count", "--n", "6", "--factors", "2,1", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = dyckpeaks(&["count", "--n", "6", "--factors", "2,1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn series_agrees_with_formula() {
    let out = dyckpeaks(&["series", "--order", "6"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,k,m,coeff"));
    let mut rows = 0usize;
    for line in lines {
        let parts: Vec<&str> = line.split(',').collect();
        let (n, k, m) = (
            parts[0].parse::<u32>().unwrap(),
            parts[1].parse::<u32>().unwrap(),
            parts[2].parse::<u32>().unwrap(),
        );
        assert_eq!(parts[3], dyckpeaks::count::w_formula(n, k, m).to_string(), "row {line}");
        rows += 1;
    }
    // Same support as the table at the same bound.
    let table = dyckpeaks(&["table", "--n-max", "6"]);
    assert_eq!(rows, stdout(&table).lines().count() - 1);
}

#[test]
fn bijection_traces_the_worked_example() {
    let out = dyckpeaks(&["bijection", "((())())((()))(())"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["output_tree"], "((((()))))()()(())");
    assert_eq!(v["statistics"]["leaves"], 4);
    assert_eq!(v["statistics"]["good_leaves"], 3);
    assert_eq!(v["statistics"]["output_good_leaves"], 2);
    assert_eq!(v["marked_necklace"]["lengths"], serde_json::json!([3, 2, 3, 1]));
}

#[test]
fn bijection_accepts_words_and_stdin() {
    // Same tree, given as its Dyck word through stdin.
    let mut child = Command::new(env!("CARGO_BIN_EXE_dyckpeaks"))
        .args(["bijection"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"UUUDDUDDUUUDDDUUDD\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["input_tree"], "((())())((()))(())");
    assert_eq!(v["output_tree"], "((((()))))()()(())");
}

#[test]
fn bijection_rejects_bad_profiles() {
    // Two non-root vertices but one leaf: not of the 2k+1 shape.
    let out = dyckpeaks(&["bijection", "UUDD"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("non-root vertices"), "stderr: {err}");

    let out = dyckpeaks(&["bijection", "((())())((()))(())", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));

    let out = dyckpeaks(&["bijection", "UXD"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites_pass_and_reject_unknown_names() {
    let out = dyckpeaks(&["verify", "--suite", "series"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("all 5 checks passed"));

    let out = dyckpeaks(&["verify", "--suite", "identities", "--format", "json", "--seed", "7"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 7);

    let out = dyckpeaks(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn polys_reports_the_whole_analysis() {
    let out = dyckpeaks(&["polys", "--n", "5", "--k", "3"]);
    let v = json_stdout(&out);
    assert_eq!(v["coefficients"], serde_json::json!(["0", "10", "10"]));
    assert_eq!(v["real_rooted"], true);
    assert_eq!(v["gamma"]["gammas"], serde_json::json!(["0", "10"]));
    assert_eq!(v["decomposition"]["pattern"], "plus_minus_t");
    assert_eq!(v["decomposition"]["minus"], serde_json::json!([]));

    // Central column: both parts nonzero, additive pattern.
    let out = dyckpeaks(&["polys", "--n", "4", "--k", "2"]);
    let v = json_stdout(&out);
    assert_eq!(v["decomposition"]["pattern"], "plus_plus_t");
    assert_eq!(v["decomposition"]["plus"], serde_json::json!(["0", "2"]));
    assert_eq!(v["decomposition"]["minus"], serde_json::json!(["2", "2"]));

    // Zero polynomial: everything degenerate but well-formed.
    let out = dyckpeaks(&["polys", "--n", "3", "--k", "5"]);
    let v = json_stdout(&out);
    assert_eq!(v["coefficients"], serde_json::json!([]));
    assert_eq!(v["real_rooted"], Value::Null);
    assert_eq!(v["degree"], Value::Null);
    assert_eq!(v["decomposition"], Value::Null);
}

#[test]
fn conjecture_reports_have_the_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = dyckpeaks(&["conjectures", "--id", "3", "--max", "6", "--out", path.to_str().unwrap()]);
    // Sweeps exit 0 when they complete, whatever the verdicts say.
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["id"], 3);
    assert!(v["range"].as_str().unwrap().contains("6"));
    let verdicts = v["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 6);
    assert_eq!(v["counterexample"].as_str().unwrap().contains("n=3"), true);

    let out = dyckpeaks(&["conjectures", "--id", "4", "--max", "4"]);
    assert!(out.status.success());
    let v = json_stdout(&out);
    assert_eq!(v["id"], 4);
    assert!(v.get("counterexample").is_none());

    let out = dyckpeaks(&["conjectures", "--id", "9", "--max", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn seeds_are_reproducible() {
    let a = dyckpeaks(&["verify", "--suite", "series", "--seed", "42"]);
    let b = dyckpeaks(&["verify", "--suite", "series", "--seed", "42"]);
    assert_eq!(stdout(&a), stdout(&b));
}
