use std::process::Command;

use braidcryst::cli::{run_with_env, EXIT_CERTIFICATE, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn run(args: &[&str]) -> braidcryst::cli::Outcome {
    let mut full = vec!["braidcryst"];
    full.extend_from_slice(args);
    run_with_env(full, None)
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn schema() -> jsonschema::Validator {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/report.schema.json");
    let raw = std::fs::read_to_string(path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&raw).unwrap()).unwrap()
}

fn assert_valid(v: &Value) {
    let errors: Vec<String> = schema().iter_errors(v).map(|e| format!("{e} at {}", e.instance_path())).collect();
    assert!(errors.is_empty(), "{errors:#?}");
}

#[test]
fn analyze_z3_text() {
    let out = run(&["analyze", "Z3"]);
    assert_eq!(out.code, EXIT_OK);
    let t = out.stdout;
    assert!(t.contains("dimension:    3"));
    assert!(t.contains("betti_1:        1"));
    assert!(t.contains("anosov:         no"));
    assert!(t.contains("kahler:         no"));
    assert!(t.contains("torsion:     pass"));
}

#[test]
fn analyze_z5_json() {
    let v = json(&["analyze", "Z5", "--format", "json"]);
    assert_valid(&v);
    assert_eq!(v["schema"], "braidcryst.report/1");
    assert_eq!(v["dimension"], 10);
    assert_eq!(v["verdicts"]["kahler"], "yes");
    assert_eq!(v["verdicts"]["calabi_yau"], 10);
    assert_eq!(v["verdicts"]["anosov"]["admits"], true);
    assert_eq!(v["certificates"]["all_passed"], true);
}

#[test]
fn analyze_z3xz5() {
    let v = json(&["analyze", "Z3xZ5", "--format", "json"]);
    assert_valid(&v);
    assert_eq!(v["dimension"], 28);
    assert_eq!(v["certificates"]["torsion"]["torsion_free"], true);
    assert_eq!(v["verdicts"]["anosov"]["admits"], true);
    assert_eq!(v["verdicts"]["kahler"], "not_decided");
    assert_eq!(v["holonomy"]["char_poly"]["text"], "(x^3 - 1)(x^5 - 1)^2(x^15 - 1)");
    let text = run(&["analyze", "Z3xZ5"]).stdout;
    assert!(text.contains("kahler:         not decided"));
}

#[test]
fn schema_accepts_other_shapes() {
    for spec in ["Z3xZ2", "Z2", "Z2xZ2", "Z6", "Z9"] {
        assert_valid(&json(&["analyze", spec, "--format", "json"]));
    }
    assert_valid(&json(&["analyze", "Z7", "--format", "json", "--no-verify", "--timings"]));
}

#[test]
fn composite_factor_notice() {
    let v = json(&["analyze", "Z6", "--format", "json"]);
    assert_eq!(v["spec"], "Z3xZ2");
    assert_eq!(v["notices"].as_array().unwrap().len(), 1);
}

#[test]
fn two_group_label() {
    let v = json(&["analyze", "Z4", "--format", "json"]);
    assert_eq!(v["group"]["construction"], "preimage");
    assert!(v["group"]["description"].as_str().unwrap().contains("Bieberbach"));
    assert_eq!(v["certificates"]["torsion"]["torsion_free"], true);
}

#[test]
fn verify_z9() {
    let out = run(&["verify", "Z9"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("basis:       pass"));
    assert!(out.stdout.contains("torsion:     pass"));
    let v = json(&["verify", "Z9", "--format", "json"]);
    assert_eq!(v["certificates"]["basis"]["hermite_forms_equal"], true);
    assert_eq!(v["certificates"]["torsion"]["cosets"].as_array().unwrap().len(), 8);
}

#[test]
fn element_dump() {
    let out = run(&["element", "3", "s1 s1"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("pure:  A_{1,2}"), "{}", out.stdout);
    assert!(out.stdout.contains("(id)"));
    assert!(out.stdout.contains("order: infinite"));
    let v = json(&["element", "3", "s1 s1 s2 S1", "--format", "json"]);
    assert_eq!(v["finite_order"], Value::Null);
    let v = json(&["element", "3", "s2 S1", "--format", "json"]);
    assert_eq!(v["finite_order"], 3);
    assert_eq!(v["element"]["perm"], serde_json::json!([2, 3, 1]));
}

#[test]
fn present_gap() {
    let out = run(&["present", "Z3", "--format", "gap"]);
    assert_eq!(out.code, EXIT_OK);
    let src = out.stdout;
    assert!(src.starts_with("F := FreeGroup(\"g_1_0_1\", \"g_1_0_2\", \"g_1_0_3\", \"a_1\");;"));
    assert!(src.contains("a_1^3*(g_1_0_1)^-1"));
    assert!(src.trim_end().ends_with("G := F / rels;;"));
    let v = json(&["present", "Z5", "--format", "json"]);
    assert_eq!(v["all_hold"], true);
}

#[test]
fn matrix_dump() {
    let v = json(&["matrix", "Z3", "--format", "json"]);
    assert_eq!(v["matrices"][0]["matrix"], serde_json::json!([[1, 0, 3], [0, 0, -1], [0, 1, -1]]));
    let v = json(&["matrix", "Z3xZ2", "--format", "json"]);
    assert_eq!(v["matrices"].as_array().unwrap().len(), 2);
}

#[test]
fn large_matrices_hidden_in_text() {
    let short = run(&["analyze", "Z45", "--no-verify"]).stdout;
    assert!(short.contains("91x91 (omitted, use --full)"));
    let full = run(&["analyze", "Z45", "--no-verify", "--full"]).stdout;
    assert!(!full.contains("omitted"));
    assert!(full.len() > short.len());
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["analyze", "Z65"]).code, EXIT_USAGE);
    assert_eq!(run(&["analyze", "Z65", "--max-order", "70", "--no-verify"]).code, EXIT_OK);
    assert_eq!(run_with_env(["braidcryst", "verify", "Z65"], Some("65".into())).code, EXIT_OK);
    assert_eq!(run_with_env(["braidcryst", "verify", "Z5"], Some("4".into())).code, EXIT_USAGE);
    assert_eq!(run_with_env(["braidcryst", "verify", "Z5"], Some("x".into())).code, EXIT_USAGE);
    assert_eq!(run(&["analyze", "Y3"]).code, EXIT_USAGE);
    assert_eq!(run(&["analyze", "Z1"]).code, EXIT_USAGE);
    assert_eq!(run(&["element", "3", "s7"]).code, EXIT_USAGE);
    assert_eq!(run(&["present", "Z3xZ2"]).code, EXIT_USAGE);
    assert_eq!(run(&["verify", "Z3", "--format", "gap"]).code, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(run(&["--help"]).code, EXIT_OK);
    assert_eq!(run(&["--version"]).code, EXIT_OK);
    assert_ne!(EXIT_CERTIFICATE, EXIT_OK);
}

#[test]
fn json_is_deterministic() {
    let a = run(&["analyze", "Z3xZ5", "--format", "json"]).stdout;
    let b = run(&["analyze", "Z3xZ5", "--format", "json"]).stdout;
    assert_eq!(a, b);
    assert!(!a.contains("timings"));
}

#[test]
fn binary_round_trip() {
    let out = Command::new(env!("CARGO_BIN_EXE_braidcryst"))
        .args(["analyze", "Z3", "--format", "json"])
        .env_remove("BRAIDCRYST_MAX_ORDER")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdicts"]["betti1"], 1);
    let out = Command::new(env!("CARGO_BIN_EXE_braidcryst"))
        .args(["verify", "Z5"])
        .env("BRAIDCRYST_MAX_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}
