use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const EXAMPLE: &str = "X^3YZ^4TU^2V^6(X^2YZT^2U-V^7)";

fn apolar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apolar")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON on stdout")
}

#[test]
fn classify_reports_generators() {
    let o = apolar(&["classify", "--poly", EXAMPLE, "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("verdict: complete intersection [CI]"), "{text}");
    assert!(text.contains("  y^3\n"), "{text}");
    assert!(text.contains("generators match: yes"), "{text}");
}

#[test]
fn classify_json_is_stable_and_sorted() {
    let first = apolar(&["classify", "--poly", EXAMPLE, "--json"]);
    let second = apolar(&["classify", "--poly", EXAMPLE, "--json"]);
    assert_eq!(first.stdout, second.stdout);
    let v = json(&first);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "classify");
    assert_eq!(v["result"]["is_ci"], true);
    assert_eq!(v["result"]["reason"], "CI");
    assert_eq!(v["result"]["generators"].as_array().unwrap().len(), 6);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["command", "input", "result", "schema_version"]);
}

#[test]
fn non_ci_reasons() {
    let v = json(&apolar(&["classify", "--poly", "XYZTUV^2(XYZ-V^3)", "--json", "--verify"]));
    assert_eq!(v["result"]["reason"], "NO_INDEX_SATISFIES_A_LT_QB");
    assert_eq!(v["result"]["verification"]["oracle_mu"], 9);
    let v = json(&apolar(&["classify", "--poly", "XYZTUV(XYZ-TV^2)", "--json"]));
    assert_eq!(v["result"]["reason"], "R_TOO_SMALL");
    assert_eq!(v["result"]["generators"], Value::Null);
}

#[test]
fn vars_pin_the_order() {
    let v = json(&apolar(&["classify", "--poly", "Y^2X - X^2Y", "--vars", "X,Y", "--json"]));
    assert_eq!(v["input"]["vars"], serde_json::json!(["X", "Y"]));
    let v = json(&apolar(&["classify", "--poly", "Y^2X - X^2Y", "--json"]));
    assert_eq!(v["input"]["vars"], serde_json::json!(["Y", "X"]));
}

#[test]
fn hilbert_over_a_prime_field() {
    let o = apolar(&["hilbert", "--poly", "X1X2X3", "--char", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["result"]["h_vector"], serde_json::json!([1, 3, 3, 1]));
    assert_eq!(v["input"]["field"], "GF(2)");
}

#[test]
fn wlp_failure_in_characteristic_two() {
    let o = apolar(&["lefschetz", "--ideal", "x^2;y^2;z^2", "--char", "2", "--mode", "wlp", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["result"]["wlp"], false);
    assert_eq!(v["result"]["certified"], true);
    assert_eq!(v["result"]["first_failure"], serde_json::json!({"i": 1, "k": 1}));
}

#[test]
fn slp_for_the_six_variable_example() {
    let v = json(&apolar(&["lefschetz", "--poly", EXAMPLE, "--json"]));
    assert_eq!(v["result"]["slp"], true);
    assert_eq!(v["result"]["ell_text"], "x + y + z + t + u + v");
}

#[test]
fn sweep_summary() {
    let o = apolar(&["sweep", "--n", "3", "--max-a", "2", "--max-b", "2", "--slp", "--jobs", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["result"]["cases"], 243);
    assert_eq!(v["result"]["mismatches"], 0);
    assert_eq!(v["result"]["slp_failures"], 0);
}

#[test]
fn exit_codes() {
    assert_eq!(apolar(&["classify", "--poly", "X^2 +"]).status.code(), Some(2));
    assert_eq!(apolar(&["classify", "--poly", "X^2 + Y"]).status.code(), Some(2));
    assert_eq!(apolar(&["classify", "--poly", "X^2Y"]).status.code(), Some(3));
    assert_eq!(apolar(&["classify", "--poly", "X^2 + XY + Y^2"]).status.code(), Some(3));
    assert_eq!(apolar(&["lefschetz", "--ideal", "x^2;x*y"]).status.code(), Some(5));
    assert_eq!(apolar(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn replay_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let p = path.to_str().unwrap();
    let o = apolar(&["classify", "--poly", EXAMPLE, "--verify", "--out", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(Path::new(p).exists());
    assert_eq!(apolar(&["--replay", p]).status.code(), Some(0));

    let mut saved: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    saved["result"]["is_ci"] = Value::Bool(false);
    std::fs::write(&path, serde_json::to_string_pretty(&saved).unwrap()).unwrap();
    let o = apolar(&["--replay", p]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("result"));

    std::fs::write(&path, "not json").unwrap();
    assert_eq!(apolar(&["--replay", p]).status.code(), Some(2));
}
