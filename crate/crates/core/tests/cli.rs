//! The binary: exit codes, text and JSON output.

use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nakayama-udr")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let value = serde_json::from_slice(&out.stdout).expect("valid JSON on stdout");
    (out.status.code().unwrap(), value)
}

#[test]
fn ring_json_has_the_documented_shape() {
    let (code, v) = json(&["ring", "--e", "2", "--ell", "9", "--top", "2", "--len", "4"]);
    assert_eq!(code, 0);
    for key in ["input", "presentation", "provenance", "checks", "timings"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let p = &v["presentation"];
    assert_eq!(p["n"], 2);
    assert_eq!(p["mV"], 4);
    assert_eq!(p["kDimension"], 6);
    assert_eq!(p["generators"], serde_json::json!(["t2^2 + t1^2*t2", "2*t1*t2 + t1^3"]));
    let prov = &v["provenance"];
    for (key, want) in [("mu", 4), ("ellPrime", 1), ("ellV", 4), ("i", 0), ("dV", 3), ("rotation", 1)] {
        assert_eq!(prov[key], want, "{key}");
    }
    assert_eq!(prov["appliedOmega"], false);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["pass"] == true && c["name"].is_string() && c["detail"].is_string()));
}

#[test]
fn ring_verify_runs_the_lift() {
    let (code, v) = json(&["ring", "--e", "1", "--ell", "5", "--len", "2", "--verify"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.iter().any(|n| n.starts_with("lift/")));
    assert!(names.iter().any(|n| n.starts_with("minimality/")));
}

#[test]
fn brauer_ring_flags_select_the_module() {
    let (code, v) = json(&["ring", "--brauer-edges", "1", "--multiplicity", "2", "--distance", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["presentation"]["ring"], "k[[t1]]/(t1^3)");
    assert_eq!(v["input"]["brauer"]["multiplicity"], 2);
}

#[test]
fn table_and_brauer_emit_arrays() {
    let (code, v) = json(&["table", "--e", "1", "--ell", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v.as_array().unwrap().len(), 3);
    let (code, v) = json(&["brauer", "--edges", "3", "--multiplicity", "2"]);
    assert_eq!(code, 0);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[2]["presentation"]["ring"], "k[[t1]]/(t1^2)");
}

#[test]
fn oracle_counts_agree() {
    let (code, v) = json(&["oracle", "--e", "1", "--ell", "4", "--len", "2", "--ring", "u3"]);
    assert_eq!(code, 0);
    let detail = v["checks"][0]["detail"].as_str().unwrap();
    assert!(detail.starts_with("8 classes"), "{detail}");
    let out = run(&["oracle", "--e", "2", "--ell", "5", "--len", "2", "--tangent", "--centralizer"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn verify_passes_and_perturbation_fails() {
    assert_eq!(run(&["verify", "--power-lemma", "--n-max", "3", "--nu-max", "6"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--grid", "small", "--p", "3"]).status.code(), Some(0));
    let out = run(&["verify", "--grid", "small", "--perturb"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("relation E"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["ring", "--e", "0", "--ell", "3", "--len", "1"]).status.code(), Some(2));
    assert_eq!(run(&["ring", "--e", "2", "--ell", "5"]).status.code(), Some(2));
    assert_eq!(run(&["ring", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["ring", "--e", "2", "--ell", "5", "--len", "2", "--p", "4"]).status.code(), Some(2));
    assert_eq!(run(&["brauer", "--edges", "2", "--multiplicity", "2", "--distance", "7"]).status.code(), Some(2));
    let capped = run(&["oracle", "--e", "2", "--ell", "6", "--len", "3", "--ring", "u4", "--cap", "10"]);
    assert_eq!(capped.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("resource cap"));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
