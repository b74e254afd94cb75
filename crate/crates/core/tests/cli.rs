//! End-to-end runs of the `starcut` binary.

use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_starcut"))
        .args(args)
        .output()
        .expect("binary runs");
    let text = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (out.status.code().unwrap(), json)
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, n, m) in [("fq", "7", "3"), ("aq", "6", "5")] {
        let file = dir.path().join(format!("{kind}.json"));
        let (code, built) = run(&["cut", "build", "--kind", kind, "--n", n, "--m", m, "--out", path_str(&file)]);
        assert_eq!(code, 0, "{built}");
        assert!(file.exists());
        let (code, v) = run(&["cut", "verify", "--file", path_str(&file), "--kind", kind, "--n", n]);
        assert_eq!(code, 0, "{v}");
        assert_eq!(v["result"]["verdict"]["is_cut"], true);
    }
}

#[test]
fn bare_build_output_is_a_cut_file() {
    let (code, v) = run(&["cut", "build", "--kind", "aq", "--n", "6", "--m", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "aq");
    assert_eq!(v["n"], 6);
    assert!(!v["stars"].as_array().unwrap().is_empty());
}

#[test]
fn shrunken_family_is_not_a_cut() {
    let dir = tempfile::tempdir().unwrap();
    let (_, mut v) = run(&["cut", "build", "--kind", "fq", "--n", "7", "--m", "3"]);
    v["stars"].as_array_mut().unwrap().pop();
    let file = dir.path().join("short.json");
    std::fs::write(&file, v.to_string()).unwrap();
    let (code, out) = run(&["cut", "verify", "--file", path_str(&file)]);
    assert_eq!(code, 4, "{out}");
    assert_eq!(out["result"]["verdict"]["is_cut"], false);
}

#[test]
fn invalid_star_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let (_, mut v) = run(&["cut", "build", "--kind", "fq", "--n", "7", "--m", "3"]);
    // a leaf that is not adjacent to its center
    v["stars"][0]["leaves"][0] = Value::from(v["stars"][0]["center"].as_str().unwrap());
    let file = dir.path().join("bad.json");
    std::fs::write(&file, v.to_string()).unwrap();
    let (code, out) = run(&["cut", "verify", "--file", path_str(&file)]);
    assert_eq!(code, 4, "{out}");
    let verdict = &out["result"]["verdict"];
    assert_eq!(verdict["invalid_member"], 0);
    assert_eq!(verdict["member_diagnostics"][0]["valid"], false);
}

#[test]
fn mismatched_expectation() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c.json");
    run(&["cut", "build", "--kind", "fq", "--n", "7", "--m", "3", "--out", path_str(&file)]);
    let (code, _) = run(&["cut", "verify", "--file", path_str(&file), "--kind", "aq"]);
    assert_ne!(code, 0);
}

#[test]
fn guard_and_range_exit_three() {
    let (code, v) = run(&["kappa", "brute", "--kind", "fq", "--n", "6", "--m", "2"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "guard");
    let (code, v) = run(&["topo", "--kind", "aq", "--n", "0"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "range");
}

#[test]
fn parse_errors_exit_two() {
    let (code, v) = run(&["topo", "--kind", "aq", "--n", "4", "--vertex", "01x1"]);
    assert_eq!(code, 2, "{v}");
    let (code, _) = run(&["kappa", "formula", "--kind", "zz", "--n", "4", "--m", "2"]);
    assert_eq!(code, 2);
}

#[test]
fn results_are_deterministic() {
    let args = ["kappa", "brute", "--kind", "aq", "--n", "4", "--m", "2"];
    let (_, a) = run(&args);
    let (_, b) = run(&args);
    assert_eq!(a["result"], b["result"]);
    let mut seq = vec!["--sequential"];
    seq.extend(args);
    let (_, c) = run(&seq);
    assert_eq!(a["result"], c["result"]);
    assert_eq!(a["result"]["exact_value"], 3);
}

#[test]
fn lemma_report_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("t.csv");
    let (code, v) = run(&["report", "lemma", "forbidden-T", "--n", "6", "--out", path_str(&csv)]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["result"]["reports"][0]["pass"], true);
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), starcut::analysis::suites::ReportRow::CSV_HEADER);
    assert!(lines.all(|l| l.ends_with(",true") || l.contains(",true,")));
}
