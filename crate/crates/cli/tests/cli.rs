use std::path::PathBuf;
use std::process::{Command, Output};

use k3dyn::curvegeom::AxisCurve;
use k3dyn::surface::build_tilde_q;
use serde_json::Value;

fn k3dyn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k3dyn")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = k3dyn(&all);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)))
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn table_csv() {
    let o = k3dyn(&["table", "--format", "csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 31);
    assert!(lines[1].starts_with("\"0,0,0\",17.944"), "{}", lines[1]);
    assert!(out.contains("\"3,3,3\",1"));
}

#[test]
fn det_reports_both_values() {
    let o = k3dyn(&["det", "--type", "2,0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "type (2,0,1): formula -80, bareiss -80, match=true");
    let v = json(&["det", "--type", "2,0,1"]);
    assert_eq!(v["report"]["formula"], "-80");
    assert_eq!(v["report"]["match"], true);
}

#[test]
fn json_has_version_header_and_is_reproducible() {
    let a = k3dyn(&["entropy", "--type", "1,1,0", "--format", "json"]);
    let b = k3dyn(&["entropy", "--type", "1,1,0", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["tool"], "k3dyn");
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(v["command"], "entropy");
    assert_eq!(v["report"]["min_poly"], serde_json::json!([1, -16, 29, -16, 1]));
}

#[test]
fn tilde_verify_passes() {
    let o = k3dyn(&["tilde-verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("24 exact curves; all checks passed"));
}

#[test]
fn curves_round_trip() {
    let v = json(&["curves", "--axis", "z"]);
    let found = v["report"].as_array().unwrap();
    assert_eq!(found.len(), 8);
    for f in found {
        assert_eq!(f["certainty"], "exact");
        let c: AxisCurve = serde_json::from_value(f["curve"].clone()).unwrap();
        assert_eq!(serde_json::to_value(&c).unwrap(), f["curve"]);
    }
}

#[test]
fn identity_check_reads_poly_file() {
    let p = tmp("tilde.json", &serde_json::to_string_pretty(&build_tilde_q()).unwrap());
    let o = k3dyn(&["identity-check", "--poly", p.to_str().unwrap(), "--axis", "y"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "y: conjugation=true, cross=true");
}

#[test]
fn snf_from_matrix_file() {
    let p = tmp("m.json", "[[2, 4], [6, 8]]");
    let v = json(&["snf", "--matrix", p.to_str().unwrap()]);
    assert_eq!(v["report"]["invariant_factors"], serde_json::json!(["2", "4"]));
}

#[test]
fn embed_check_single_name() {
    let v = json(&["embed-check", "--name", "B332"]);
    let r = &v["report"][0];
    assert_eq!(r["gram_ok"], true);
    assert_eq!(r["primitive"], true);
    assert_eq!(r["type"], serde_json::json!([3, 3, 2]));
}

#[test]
fn relations_verify() {
    let o = k3dyn(&["relations"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("ok")).count(), 4);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(k3dyn(&["det", "--type", "1,2"]).status.code(), Some(2));
    assert_eq!(k3dyn(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(k3dyn(&["embed-check", "--name", "B999"]).status.code(), Some(2));
    assert_eq!(k3dyn(&["relations", "--format", "csv"]).status.code(), Some(2));
}

#[test]
fn parse_errors_name_the_line() {
    let p = tmp("bad.json", "{\n  \"coeffs\": [\n    {\"x\": 0, \"y\": 0,\n  ]\n}\n");
    let o = k3dyn(&["curves", "--poly", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");
}

#[test]
fn degenerate_form_is_a_computation_failure() {
    let p = tmp("zero.json", "{\"coeffs\": []}");
    let o = k3dyn(&["curves", "--poly", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}
