use std::process::{Command, Output};

use hilbfix_core::partitions::enumerate_multipartitions;
use hilbfix_core::surfaces::{surface, SurfaceId};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilbfix")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn fixed_row_counts() {
    let v = json(&["fixed", "--surface", "SZ2", "--n", "1"]);
    assert_eq!(v["schema"], "hilbfix/1");
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
    assert_eq!(json(&["fixed", "--surface", "TE", "--n", "0"])["rows"].as_array().unwrap().len(), 1);
    let expected = enumerate_multipartitions(surface(SurfaceId::SZ3), 2).unwrap().len();
    assert_eq!(json(&["fixed", "--surface", "SZ3", "--n", "2"])["count"], expected);
}

#[test]
fn fixed_csv_has_a_header_and_one_line_per_row() {
    let out = run(&["fixed", "--surface", "SZ3", "--n", "1", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("multipartition,"));
    assert_eq!(text.lines().count(), 1 + surface(SurfaceId::SZ3).num_components());
}

#[test]
fn hilb2_descriptors() {
    // y with x of weight -1 and y of weight 2, ideal I^(2): [2]_{t^3}.
    let v = json(&["hilb2", "--eq", "y", "--weights", "-1,2", "--chart", "U2"]);
    assert_eq!(v["polynomial"], serde_json::json!({"0": "1", "3": "1"}));
    assert_eq!(v["rankAtOne"], "2");
    // b1 < b2: [1]_{t^3} [4]_{t^2}.
    let v = json(&["hilb2", "--sep", "0,1,3,1,2,2,3", "--oracle", "6"]);
    assert_eq!(v["polynomial"], serde_json::json!({"0": "1", "2": "1", "4": "1", "6": "1"}));
    assert_eq!(v["oracleChecked"], true);
    let v = json(&["hilb2", "--case", "u1:1,2,1,2:3"]);
    assert_eq!(v["allFree"], true);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["hilb2", "--eq", "xy^2", "--weights", "-1,2", "--chart", "U2", "--e", "4"][..],
        &["hilb2", "--sep", "0,1,2,0,1,2,3"],
        &["hilb2"],
        &["fixed", "--surface", "XX", "--n", "1"],
        &["fixed", "-s", "TE"],
        &["verify", "pairings", "--samples", "1/2"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_orders_is_deterministic() {
    let a = run(&["verify", "orders", "--n", "2"]);
    let b = run(&["verify", "orders", "--n", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"][0]["criterion"], 8);
}

#[test]
fn verify_pairings_with_theta_audit() {
    let v = json(&["verify", "pairings", "--n", "2", "--theta-audit"]);
    assert_eq!(v["passed"], true);
    let reports = v["checks"][0]["detail"].as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["equal"] == true && r.get("thetaTerms").is_some()));
}

#[test]
fn catalog_export_carries_a_checksum() {
    let v = json(&["catalog", "export"]);
    assert_eq!(v["checksum"], hilbfix_core::surfaces::catalog_checksum());
    assert!(v["catalog"].is_array() || v["catalog"].is_object());
}
