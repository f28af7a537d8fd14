//! End-to-end runs of the `orthoscalar` binary.

use std::path::Path;
use std::process::Command;

use orthoscalar::families::{construct_family, ParameterPoint};
use orthoscalar::io::representation_to_json;
use orthoscalar::rep::direct_sum;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_orthoscalar")).args(args).output().unwrap();
    let code = out.status.code().unwrap();
    let doc = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, doc)
}

fn ok(args: &[&str]) -> Value {
    let (code, doc) = run(args);
    assert_eq!(code, 0, "{args:?}: {doc}");
    assert_eq!(doc["status"], "ok");
    doc["payload"].clone()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_reports_q_and_l() {
    let p = ok(&["roots", "--graph", "D~4", "--classify", "1,1,1,1,2"]);
    assert_eq!(p["class"], "Imaginary");
    assert_eq!(p["q"], 0);
    assert_eq!(p["L"], 0);
}

#[test]
fn roots_up_to_delta() {
    let p = ok(&["roots", "--graph", "D~4", "--bound", "delta"]);
    assert_eq!(p["count"], 25);
    assert_eq!(p["rows"].as_array().unwrap().len(), 25);
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        vec!["roots", "--graph", "X9"],
        vec!["roots", "--graph", "D~4", "--classify", "1,2"],
        vec!["construct", "--family", "E6~"],
        vec!["construct", "--family", "E6", "--seed", "1"],
        vec!["verify", "/nonexistent/rep.json"],
    ] {
        let (code, doc) = run(&args);
        assert_eq!(code, 2, "{args:?}");
        assert_eq!(doc["status"], "error");
        assert!(!doc["diagnostics"].as_array().unwrap().is_empty());
    }
}

#[test]
fn seeded_construction_is_deterministic_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("e7.json");
    let a = ok(&["--seed", "11", "construct", "--family", "E7~", "--out", path(&f)]);
    let f2 = dir.path().join("e7b.json");
    let b = ok(&["construct", "--family", "E7~", "--seed", "11", "-o", path(&f2)]);
    assert_eq!(a["params"], b["params"]);
    assert_eq!(a["character"], b["character"]);
    assert_eq!(std::fs::read(&f).unwrap(), std::fs::read(&f2).unwrap());
    assert_eq!(a["schur"], true);
    let v = ok(&["verify", path(&f)]);
    assert_eq!(v["orthoscalar"], true);
    assert_eq!(v["schur"], true);
    assert_eq!(v["dims"]["z"], 4);
}

#[test]
fn construct_from_parameter_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("d4.json");
    let pi = std::f64::consts::PI;
    let doc = serde_json::json!({
        "family": "D~4",
        "params": {"x0": 1.0, "y0": 2.0, "x1": 2.0, "phi1": pi / 4.0, "phi2": pi / 4.0, "theta": pi / 3.0}
    });
    std::fs::write(&f, doc.to_string()).unwrap();
    let p = ok(&["construct", "--family", "D~4", "--params", path(&f)]);
    assert!((p["character"]["c1"].as_f64().unwrap() - 5.0).abs() < 1e-12);
    assert!((p["character"]["a1"].as_f64().unwrap() - 2.5).abs() < 1e-12);
}

#[test]
fn cycle_shorthand_and_dependent_solving() {
    let p = ok(&["construct", "--family", "A~4", "--params", r#"{"moduli":[1,1,1,1],"phase":0.5}"#]);
    assert_eq!(p["character"]["v1"], 2.0);
    let (code, doc) = run(&["--seed", "3", "construct", "--family", "E6~"]);
    assert_eq!(code, 0);
    let mut params = doc["payload"]["params"].as_object().unwrap().clone();
    params.remove("theta2");
    params.remove("theta3");
    let text = serde_json::json!({"family": "E6~", "params": params}).to_string();
    let again = ok(&["construct", "--family", "E6~", "--params", &text]);
    assert_eq!(again["orthoscalar"], true);
}

#[test]
fn real_root_construction_and_reduction() {
    let p = ok(&["construct", "--graph", "E6~", "--root", "1,1,1,1,0,1,0"]);
    assert_eq!(p["schur"], true);
    let r = ok(&["reduce", "--graph", "E6~", "--vector", "1,2,2,1,1,1,1"]);
    assert_eq!(r["replay_ok"], true);
    let r = ok(&["reduce", "--graph", "D~4", "--vector", "1,1,1,1,1"]);
    assert_eq!(r["path"], serde_json::json!(["even"]));
    assert_eq!(r["terminal"], serde_json::json!([0, 0, 0, 0, 1]));
    let (code, _) = run(&["reduce", "--graph", "D~4", "--vector", "1,1,1,1,2"]);
    assert_eq!(code, 2);
}

#[test]
fn functor_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("d5.json");
    let g = dir.path().join("d5f.json");
    ok(&["--seed", "4", "construct", "--family", "D~5", "--out", path(&f)]);
    let p = ok(&["functor", path(&f), "--parity", "odd", "--k", "2", "--check-inverse", "--out", path(&g)]);
    assert_eq!(p["inverse_equivalent"], true);
    assert_eq!(p["sequence"], serde_json::json!(["odd", "even"]));
    assert_eq!(ok(&["verify", path(&g)])["orthoscalar"], true);
}

#[test]
fn decompose_a_direct_sum() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("sum.json");
    let point = |phase: f64| {
        let mut p = ParameterPoint::new("A~4".parse().unwrap());
        for k in 1..=4 {
            p.set(&format!("m{k}"), 1.0);
        }
        p.with("phase", phase)
    };
    let a = construct_family(&point(0.3)).unwrap();
    let b = construct_family(&point(1.7)).unwrap();
    let sum = direct_sum(&[a, b]).unwrap();
    std::fs::write(&f, representation_to_json(&sum, None)).unwrap();
    let p = ok(&["decompose", path(&f)]);
    assert_eq!(p["count"], 2);
}

#[test]
fn table_output_lists_rows() {
    let out = Command::new(env!("CARGO_BIN_EXE_orthoscalar"))
        .args(["--format", "table", "roots", "--graph", "A~4", "--bound", "delta"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap().split_whitespace().collect::<Vec<_>>(), ["L", "class", "q", "vector"]);
    assert!(lines.count() > 1);
    let graphs = ok(&["graphs"]);
    assert_eq!(graphs["rows"].as_array().unwrap().len(), 10);
}
