use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unisem"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

const LEFT_ZERO_2: &str = "# names: a b\n2\n0 0\n1 1\n";
const Z2_ZERO: &str = "3\n0 1 2\n1 0 2\n2 2 2\n";
const LEFT_ZERO_3: &str = "3\n0 0 0\n1 1 1\n2 2 2\n";

#[test]
fn uniform_text_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let lz2 = write(dir.path(), "lz2.txt", LEFT_ZERO_2);
    let out = run(&["uniform", &lz2]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "uniform: true\n");

    let lz3 = write(dir.path(), "lz3.txt", LEFT_ZERO_3);
    let out = run(&["--json", "uniform", &lz3]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "v1");
    assert_eq!(v["uniform"], false);
    assert!(v["witness"]["subact"].as_array().unwrap().len() >= 2);
}

#[test]
fn classify_zero_group() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "z2zero.txt", Z2_ZERO);
    let out = run(&["classify", &f]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("classification: ZeroGroup"));
    let v: Value = serde_json::from_slice(&run(&["--json", "classify", &f]).stdout).unwrap();
    assert_eq!(v["classification"], "ZeroGroup");
}

#[test]
fn analyze_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "lz3.txt", LEFT_ZERO_3);
    let a = run(&["--json", "analyze", &f]);
    let b = run(&["--json", "analyze", &f]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let v: Value = serde_json::from_str(&text).unwrap();
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
    let at = |key: &str| text.find(&format!("\n  \"{key}\":")).unwrap();
    assert!(at("schema") < at("input") && at("input") < at("order") && at("order") < at("profile"));
    assert_eq!(v["uniform"], false);
    assert_eq!(v["zero_elements"], serde_json::json!([0, 1, 2]));
}

#[test]
fn analyze_uses_element_names() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "lz2.txt", LEFT_ZERO_2);
    let text = stdout(&run(&["analyze", &f]));
    assert!(text.contains("zero elements: {a,b}"), "{text}");
    assert!(text.contains("classification: TwoElementLeftZero"));
}

#[test]
fn congruence_by_name() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "lz2.txt", LEFT_ZERO_2);
    let out = run(&["congruence", &f, "--pair", "a", "b"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("{a,b}"));
    let out = run(&["congruence", &f, "--pair", "a", "c"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn construct_and_reuse() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("r2.txt");
    let out = run(&["construct", "right-zero", "2", "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let r2 = out_path.to_str().unwrap();
    let one = run(&["construct", "adjoin-identity", r2]);
    let f = write(dir.path(), "r2one.txt", &stdout(&one));
    assert!(stdout(&run(&["uniform", &f])).starts_with("uniform: false\nwitness: "));

    let out = run(&["construct", "group-two-left-zeros", "Z3", "--strict"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("(1,1,3)"));

    let out = run(&["--json", "construct", "rees0", "Z2", "1", "2", "0;1"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 5);
}

#[test]
fn opposite_of_left_zero() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "lz2.txt", LEFT_ZERO_2);
    assert_eq!(stdout(&run(&["opposite", &f])), "# names: a b\n2\n0 1\n0 1\n");
}

#[test]
fn census_counts_filters_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache = cache.to_str().unwrap();
    let out = run(&["census", "--order", "3", "--cache", cache]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("# 24 semigroups of order 3\n"));
    assert_eq!(text.lines().count(), 25);
    let cached = fs::read_to_string(Path::new(cache).join("census-3.txt")).unwrap();
    assert_eq!(cached.lines().count(), 24);
    assert_eq!(stdout(&run(&["census", "--order", "3", "--cache", cache])), text);

    let v: Value =
        serde_json::from_slice(&run(&["--json", "census", "--order", "4", "--filter", "uniform,band"]).stdout).unwrap();
    // right_zero(4) and right_zero(3) with a zero adjoined
    assert_eq!(v["count"], 2);
    let out = run(&["census", "--order", "7"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["census", "--order", "3", "--filter", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes_follow_reports() {
    let out = run(&["verify", "--check", "C1", "--max-order", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("C1   PASS"));

    let out = run(&["--json", "verify", "--check", "all", "--max-order", "3"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let passed = v["passed"].as_bool().unwrap();
    assert_eq!(out.status.code(), Some(if passed { 0 } else { 1 }));
    assert_eq!(v["reports"].as_array().unwrap().len(), 15);

    assert_eq!(run(&["verify", "--check", "C99"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "--check", "C1", "--max-order", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--check", "C1", "--max-order", "6"]).status.code(),
        Some(2)
    );
}

#[test]
fn input_errors_report_positions() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "2\n0 1\n1 9\n");
    let out = run(&["uniform", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3, column 3"));

    let nonassoc = write(dir.path(), "na.txt", "2\n1 1\n0 0\n");
    let out = run(&["analyze", &nonassoc]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("associativity fails at (0,0,0)"));

    assert_eq!(run(&["uniform", "/nonexistent/file"]).status.code(), Some(2));
}
