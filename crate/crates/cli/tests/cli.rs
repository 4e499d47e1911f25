use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_g2cover"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn g2cover");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn ok_json(args: &[&str], stdin: Option<&str>) -> Value {
    let out = run(args, stdin);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

fn preset(name: &str) -> String {
    String::from_utf8(run(&["preset", name], None).stdout).unwrap()
}

#[test]
fn worked_example_certificate() {
    let r = ok_json(&["sigma-torsion"], Some(&preset("ex8_6")));
    assert_eq!(r["sigma_orders"], serde_json::json!([3, 3]));
    assert_eq!(r["verdict"], "BiluApplicable");
}

#[test]
fn presets_replay_their_stated_orders() {
    for name in ["ex8_3", "ex8_4", "ex8_5"] {
        let p: Value = serde_json::from_str(&preset(name)).unwrap();
        let r = ok_json(&["sigma-torsion"], Some(&p.to_string()));
        assert_eq!(r["sigma_orders"], p["expected"]["sigma_orders"], "{name}");
    }
}

#[test]
fn preset_list_is_complete() {
    let names = ok_json(&["preset"], None);
    assert_eq!(names.as_array().unwrap().len(), 11);
    let out = run(&["preset", "ex9_9"], None);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn report_is_accepted_back() {
    let first = ok_json(&["sigma-torsion"], Some(&preset("ex8_5")));
    let again = ok_json(&["sigma-torsion"], Some(&first.to_string()));
    assert_eq!(first, again);
}

#[test]
fn verify_and_invariants() {
    let input = r#"{"P": [0, 27, 54, 19], "Q": [-9, 0, 1]}"#;
    let v = ok_json(&["verify-decomposition", input], None);
    assert_eq!(v["decomposition"]["f"], serde_json::json!(["729", "0", "486", "2916", "3969", "2052", "360"]));
    let ic = ok_json(&["invariants", &v.to_string()], None);
    assert!(ic["i10"].is_string());
    let bad = run(&["verify-decomposition", r#"{"P": [1], "Q": [0, 1]}"#], None);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn malformed_json_is_input_error() {
    let out = run(&["sigma-torsion", "{\"curve\": "], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
}

#[test]
fn cover_and_quotient() {
    let input = r#"{"curve": {"P": [0, 27, 54, 19], "Q": [-9, 0, 1]}, "marked_x": "0"}"#;
    let c = ok_json(&["build-cover", input], None);
    assert_eq!(c["involution_identity"], true);
    let q = ok_json(&["elliptic-quotient", input], None);
    assert!(q["fiber"].is_object());
}

#[test]
fn universal_check_passes_and_detects_mutation() {
    let c = ok_json(&["universal-check"], None);
    assert_eq!(c["pass"], true);
    let dir = tempfile::tempdir().unwrap();
    let mut fam = serde_json::from_str::<Value>(&preset("bft_universal")).unwrap()["source"]["family"].clone();
    fam["g"][0]["terms"][0]["coef"] = Value::String("2".into());
    let path = dir.path().join("u.json");
    std::fs::write(&path, fam.to_string()).unwrap();
    let c = ok_json(&["universal-check", "--input", path.to_str().unwrap()], None);
    assert_eq!(c["pass"], false);
}

#[test]
fn trinomial_classification() {
    let c = ok_json(&["trinomial", "--n", "4", "--r", "1", "--s", "1", "--m", "3", "--a", "-2", "--b", "-1"], None);
    assert_eq!(c["class"]["delta"], 5);
    assert_eq!(c["class"]["cyclic"], true);
    let zero = run(&["trinomial", "--n", "4", "--r", "1", "--s", "1", "--m", "3", "--a", "0", "--b", "1"], None);
    assert_eq!(zero.status.code(), Some(2));
}

#[test]
fn convert_models() {
    let s = ok_json(&["convert-model", r#"{"intro": {"a": 2, "b": 3}}"#], None);
    assert_eq!(s["sextic"]["f"], serde_json::json!(["-1", "0", "0", "0", "3", "1", "2"]));
    let s = ok_json(&["convert-model", r#"{"quartic": {"a9": 1, "a6": 2, "a8": 3, "a7": 5}}"#], None);
    assert!(s["sextic"]["f"].is_array());
}

#[test]
fn scan_writes_json_lines_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.jsonl");
    let input = r#"{"preset": "ex8_5", "grid": {"ranges": [{"min": -2, "max": 2}], "max_num": 2, "max_den": 1}}"#;
    let out = run(&["scan", "--jobs", "2", "--output", path.to_str().unwrap(), input], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 6);
    let summary = &lines[5]["summary"];
    assert_eq!(summary["grid_size"], 5);
    // same bytes on a second run
    let again = run(&["scan", input], None);
    assert_eq!(String::from_utf8(again.stdout).unwrap(), text);
}

#[test]
fn identity_check_records_seed() {
    let input = r#"{"preset": "ex8_5", "claim": {"component": 2, "order": 2}}"#;
    let r = ok_json(&["identity-check", "--trials", "5", "--seed", "4", input], None);
    assert_eq!(r["seed"], 4);
    assert_eq!(r["verdict"]["status"], "pass");
}
