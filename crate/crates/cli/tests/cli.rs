//! End-to-end tests of the binary: exit codes, output schemas, the
//! JSON round-trip, and byte determinism.

use std::process::{Command, Output};

use paneitz_core::rossi::BandMatrix;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_paneitz-rossi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn test_matrix_k1_json_balanced_entry() {
    let out = run(&["matrix", "--k", "1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["k"], 1);
    assert_eq!(v["face"]["balanced"], serde_json::json!([[[0, 0, -3]]]));
}

#[test]
fn test_matrix_rejects_k0() {
    let out = run(&["matrix", "--k", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn test_matrix_json_round_trip() {
    let out = run(&["matrix", "--k", "3"]);
    assert!(out.status.success());
    let parsed: BandMatrix = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(parsed, BandMatrix::build(3));
}

#[test]
fn test_matrix_output_byte_deterministic() {
    let a = run(&["matrix", "--k", "4", "--format", "csv"]);
    let b = run(&["matrix", "--k", "4", "--format", "csv"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn test_spectrum_exact_count_one() {
    let out = run(&["spectrum", "--k", "5", "--t", "1/2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["negative_count_exact"], 1);
    assert_eq!(v["certification"], "minor-signs");
    assert_eq!(v["t"], "1/2");
    assert_eq!(v["eigenvalues"].as_array().unwrap().len(), 5);
}

#[test]
fn test_spectrum_float_mode_k1() {
    let out = run(&["spectrum", "--k", "1", "--t", "0.5"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    let eigs = v["eigenvalues"].as_array().unwrap();
    assert_eq!(eigs.len(), 1);
    assert!((eigs[0].as_f64().unwrap() + 0.75).abs() < 1e-12);
    // float mode carries no exact certificate
    assert!(v.get("negative_count_exact").is_none());
}

#[test]
fn test_spectrum_degenerate_t0() {
    let out = run(&["spectrum", "--k", "3", "--t", "0/1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["negative_count_exact"], 0);
    assert_eq!(v["certification"], "sturm-fallback");
}

#[test]
fn test_spectrum_bad_t_is_usage_error() {
    let out = run(&["spectrum", "--k", "2", "--t", "half"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn test_detshift_text_matches_reference() {
    let out = run(&["detshift", "--k", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "det(P_2 + shift I) = 36 t^2 (1 - t^2)^2\n");
}

#[test]
fn test_detshift_json_coefficients() {
    let out = run(&["detshift", "--k", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["det"], serde_json::json!([0, 0, 36, 0, -72, 0, 36]));
    assert_eq!(v["shift"], serde_json::json!([0, 0, 3]));
}

#[test]
fn test_verify_paper_restricted_passes() {
    let out = run(&["verify-paper", "--k-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 11);
    // per-check diagnostics go to standard error
    let diag = String::from_utf8(out.stderr).unwrap();
    assert!(diag.contains("shifted-determinants"));
}

#[test]
fn test_scan_empty_grid_is_ok() {
    let out = run(&["scan", "--k-max", "3", "--t-grid", "0.9:0.1:0.1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_str(&out), "k,t,min_eigenvalue,bound,margin,pass\n");
}

#[test]
fn test_scan_malformed_grid_is_usage_error() {
    for bad in ["nope", "0.1:0.9", "0.1:0.9:0", "0.1:0.9:-0.1", "a:b:c"] {
        let out = run(&["scan", "--k-max", "2", "--t-grid", bad]);
        assert_eq!(out.status.code(), Some(2), "grid {bad}");
    }
}

#[test]
fn test_scan_jobs_do_not_change_bytes() {
    let serial = run(&["scan", "--k-max", "6", "--t-grid", "0.1:0.9:0.2", "--jobs", "1"]);
    let parallel = run(&["scan", "--k-max", "6", "--t-grid", "0.1:0.9:0.2", "--jobs", "4"]);
    assert!(serial.status.success());
    assert_eq!(serial.stdout, parallel.stdout);
    let body = stdout_str(&serial);
    assert_eq!(body.lines().count(), 1 + 6 * 5);
}

#[test]
fn test_oracle_check_single_k() {
    let out = run(&["oracle-check", "--k", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["all_equal"], true);
    assert_eq!(v["results"][0]["k"], 4);
}

#[test]
fn test_output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("block.json");
    let out = run(&["matrix", "--k", "2", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let parsed: BandMatrix = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parsed, BandMatrix::build(2));
}

#[test]
fn test_unknown_subcommand_is_usage_error() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}
