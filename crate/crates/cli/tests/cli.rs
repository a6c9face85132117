use std::path::Path;
use std::process::Command;

use gred_check::{EXIT_BUDGET, EXIT_INPUT, EXIT_OK};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = gred_check::run(std::iter::once("gred-check").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn export_to(dir: &Path, entry: &str, problem: &str, file: &str) -> String {
    let (code, text, _) = run(&["catalog", "export", entry, "--problem", problem]);
    assert_eq!(code, EXIT_OK);
    let path = dir.join(file);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn json_report(args: &[&str]) -> (i32, Value) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let mut full = args.to_vec();
    full.extend(["--json", path.to_str().unwrap()]);
    let (code, _, err) = run(&full);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("no report: {err}"));
    (code, serde_json::from_str(&text).unwrap())
}

#[test]
fn run_so2_saturated_reports_r1() {
    let dir = tempfile::tempdir().unwrap();
    let prob = export_to(dir.path(), "so2_2v", "axes", "so2_Y.prob");
    let (code, j) = json_report(&["run", &prob, "--check", "saturated"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(j["g_saturated"]["value"], "proved_no");
    assert_eq!(j["g_saturated"]["rule"], "R1");
    for key in ["problem", "g_saturated", "g_reduced", "density", "real"] {
        assert!(j.get(key).is_some(), "missing key {key}");
    }
    assert!(j["g_reduced"].is_null());
    let kinds: Vec<&str> = j["g_saturated"]["evidence"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["kind"].as_str().unwrap())
        .collect();
    assert!(kinds.contains(&"nonmember") && kinds.contains(&"witness_point"), "{kinds:?}");
}

#[test]
fn file_without_ideal_section_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.prob");
    std::fs::write(&path, "ring x y\ninvariants\nq = x^2 + y^2\nend\ninvariant_dim 1\n").unwrap();
    let (code, _, err) = run(&["run", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("empty.prob") && err.contains("ideal"), "{err}");

    let (code, _, _) = run(&["run", dir.path().join("missing.prob").to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn syntax_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let good = std::fs::read_to_string(export_to(dir.path(), "so2_2v", "axes", "a.prob")).unwrap();
    let bad = good.replacen("ideal Y\n", "ideal Y\np1 ** q1\n", 1);
    let line = bad.lines().position(|l| l == "p1 ** q1").unwrap() + 1;
    let path = dir.path().join("bad.prob");
    std::fs::write(&path, bad).unwrap();
    let (code, _, err) = run(&["run", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains(&format!("bad.prob:{line}:")), "{err}");
}

#[test]
fn small_budget_exits_3_with_unknown_verdicts() {
    let dir = tempfile::tempdir().unwrap();
    let prob = export_to(dir.path(), "sl2_k4", "two_copies", "sl2k4_Y.prob");
    let (code, j) = json_report(&["run", &prob, "--budget", "10"]);
    assert_eq!(code, EXIT_BUDGET);
    assert_eq!(j["budget_exhausted"], true);
    assert_eq!(j["g_saturated"]["value"], "unknown");
    assert_eq!(j["g_reduced"]["value"], "unknown");
}

#[test]
fn budget_in_the_file_applies_unless_overridden() {
    let dir = tempfile::tempdir().unwrap();
    let prob = export_to(dir.path(), "sl2_k4", "two_copies", "b.prob");
    let mut text = std::fs::read_to_string(&prob).unwrap();
    text.push_str("options budget=10 checks=saturated\n");
    std::fs::write(&prob, text).unwrap();
    let (code, j) = json_report(&["run", &prob]);
    assert_eq!(code, EXIT_BUDGET);
    assert!(j["g_reduced"].is_null());
    let (code, j) = json_report(&["run", &prob, "--budget", "1000000"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(j["g_saturated"]["value"], "proved_no");
}

#[test]
fn catalog_commands() {
    let (code, out, _) = run(&["catalog", "list"]);
    assert_eq!(code, EXIT_OK);
    let names = ["sl2_k2", "sl2_k3", "sl2_k4", "so3_2v", "so2_2v", "su2_quat"];
    assert!(names.iter().all(|n| out.contains(n)), "{out}");

    let (code, j) = json_report(&["catalog", "run", "so3_2v"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(j["g_reduced"]["value"], "proved_no");

    let (code, _, err) = run(&["catalog", "run", "sl7_k9"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("sl7_k9"));
}

#[test]
fn export_round_trips_through_run() {
    let dir = tempfile::tempdir().unwrap();
    let (_, exported, _) = run(&["catalog", "export", "sl2_k3"]);
    let path = dir.path().join("sl2_k3.prob");
    std::fs::write(&path, &exported).unwrap();
    let file = gred_check::format::parse(&exported, "sl2_k3.prob").unwrap();
    assert_eq!(gred_check::format::export(&file.problem, &file.options), exported);

    let (code, from_file) = json_report(&["run", path.to_str().unwrap()]);
    let (_, from_catalog) = json_report(&["catalog", "run", "sl2_k3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(strip_timings(from_file), strip_timings(from_catalog));
}

fn strip_timings(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timings_ms");
    v
}

#[test]
fn reports_are_deterministic() {
    for args in [&["catalog", "run", "su2_quat", "--all-rules"][..], &["catalog", "run", "sl2_k4", "--problem", "two_copies"]] {
        let (_, a) = json_report(args);
        let (_, b) = json_report(args);
        assert_eq!(strip_timings(a), strip_timings(b));
    }
}

#[test]
fn text_report_lists_verdicts_and_evidence() {
    let (code, out, _) = run(&["catalog", "run", "so2_2v", "--problem", "axes"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("g_saturated: proved_no (R1)"), "{out}");
    assert!(out.contains("p1*q1 not in rad("), "{out}");
    assert!(out.contains("point (1,0,1,0)"), "{out}");
}

#[test]
fn engine_verbs() {
    let (code, out, _) = run(&["gb", "--ring", "x,y", "x^2 - y", "x*y - 1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "y^2 - x\nx*y - 1\nx^2 - y\n");

    let (_, lex, _) = run(&["--order", "lex", "gb", "--ring", "x,y", "x^2 - y", "x*y - 1"]);
    assert!(lex.lines().any(|l| l == "y^3 - 1"), "{lex}");

    let (_, out, _) = run(&["dim", "--ring", "x,y,z", "x*y", "x*z"]);
    assert_eq!(out.trim(), "2");

    let (_, out, _) = run(&["member", "--ring", "x,y", "-x^2*y + y", "x^2 - 1"]);
    assert!(out.starts_with("true\n"), "{out}");
    let (_, out, _) = run(&["member", "--ring", "x,y", "x", "x^2"]);
    assert!(out.starts_with("false\nnormal form: x"), "{out}");
    let (_, out, _) = run(&["radmember", "--ring", "x,y", "x", "x^2"]);
    assert_eq!(out, "true\n");

    let (code, _, err) = run(&["dim", "--ring", "x", "x +"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("syntax"), "{err}");
    let (code, _, _) = run(&["--budget", "0", "gb", "--ring", "x,y", "x^2 - y", "x*y - 1"]);
    assert_eq!(code, EXIT_BUDGET);
}

#[test]
fn binary_reports_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gred-check");
    let status = Command::new(bin).args(["catalog", "list"]).output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&status.stdout).contains("su2_quat"));
    let status = Command::new(bin).args(["run", "/nonexistent.prob"]).output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_INPUT));
    let status = Command::new(bin).args(["bogus"]).output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_INPUT));
}
