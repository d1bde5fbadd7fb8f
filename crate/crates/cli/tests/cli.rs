//! End-to-end tests of the `ibx` binary: exit codes, report determinism,
//! construction round-trips, the solver, and classification.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn ibx() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ibx"))
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    ibx().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap_or(-1)
}

const DUAL_BIALGEBRA: &str = r#"{
  "format_version": "1",
  "kind": "bialgebra",
  "lambda": "1",
  "spaces": [{"name": "A", "dim": 2, "labels": ["1", "x"]}],
  "tensors": {
    "mu": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"]],
    "delta": [[0,0,0,"-1"],[1,1,0,"-1"]],
    "unit": [[0,"1"]]
  }
}"#;

const DUAL_ALGEBRA: &str = r#"{
  "format_version": "1",
  "kind": "algebra",
  "spaces": [{"name": "A", "dim": 2, "labels": ["1", "x"]}],
  "tensors": {
    "mu": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"]],
    "unit": [[0,"1"]]
  }
}"#;

const K_ALGEBRA: &str = r#"{
  "format_version": "1",
  "kind": "algebra",
  "spaces": [{"name": "A", "dim": 1, "labels": ["e"]}],
  "tensors": {
    "mu": [[0,0,0,"1"]],
    "unit": [[0,"1"]]
  }
}"#;

#[test]
fn check_passes_on_a_valid_bialgebra() {
    let dir = tempfile::tempdir().unwrap();
    // dual numbers with the derivation coproduct of x (x) x at weight 1:
    // delta(1) = -(1 (x) 1), delta(x) = -(x (x) 1)
    let file = write(dir.path(), "dual.json", DUAL_BIALGEBRA);
    let out = run(&["check", file.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("ok"));
}

#[test]
fn check_fails_with_exit_one_and_labels() {
    let dir = tempfile::tempdir().unwrap();
    // same structure with a corrupted coproduct entry
    let bad = DUAL_BIALGEBRA.replace(r#"[1,1,0,"-1"]"#, r#"[1,1,0,"-1"],[1,1,1,"1"]"#);
    let file = write(dir.path(), "bad.json", &bad);
    let out = run(&["check", file.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 1);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"ok\": false"));
    assert!(text.contains("COASSOC") || text.contains("COMPAT"));
}

#[test]
fn malformed_rational_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = DUAL_ALGEBRA.replace("\"1\"]", "\"1/0\"]");
    let file = write(dir.path(), "bad.json", &bad);
    let out = run(&["check", file.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn wrong_kind_for_product_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "alg.json", DUAL_ALGEBRA);
    let out = run(&["construct", file.to_str().unwrap(), "--product", "biproduct"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn json_report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "dual.json", DUAL_BIALGEBRA);
    let a = run(&["check", file.to_str().unwrap(), "--format", "json"]);
    let b = run(&["check", file.to_str().unwrap(), "--format", "json"]);
    let strip = |out: &Output| -> String {
        String::from_utf8_lossy(&out.stdout)
            .lines()
            .filter(|l| !l.contains("timing_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&a), strip(&b));
    assert!(String::from_utf8_lossy(&a.stdout).contains("input_digest"));
}

#[test]
fn construct_biproduct_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    // a braided object: one-dimensional carrier with zero structure over the
    // dual-numbers base at weight zero
    let braided = r#"{
      "format_version": "1",
      "kind": "braided",
      "lambda": "0",
      "spaces": [
        {"name": "V", "dim": 1, "labels": ["v"]},
        {"name": "H", "dim": 2, "labels": ["1", "x"]}
      ],
      "tensors": {
        "mu": [],
        "delta": [],
        "mu_h": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"]],
        "delta_h": []
      }
    }"#;
    let file = write(dir.path(), "braided.json", braided);
    let out_path = dir.path().join("biproduct.json");
    let out = run(&[
        "construct",
        file.to_str().unwrap(),
        "--product",
        "biproduct",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.contains("\"kind\": \"bialgebra\""));
    assert!(text.contains("\"ok\": true"));
    // the output re-parses and re-checks identically
    let check = run(&["check", out_path.to_str().unwrap()]);
    assert_eq!(code(&check), 0);
    // and re-serializing is canonical
    let reparsed = run(&["check", out_path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&reparsed), 0);
}

#[test]
fn solve_wayb_on_the_ground_field() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k.json", K_ALGEBRA);
    // weight zero: only the zero element solves over {-1, 0, 1}
    let out = run(&[
        "solve-wayb",
        file.to_str().unwrap(),
        "--lambda",
        "0",
        "--coeffs",
        "-1,0,1",
    ]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    let solutions = doc["solutions"].as_array().unwrap();
    assert_eq!(solutions.len(), 1);
    assert!(solutions[0].as_array().unwrap().is_empty());
    // weight one adds the scaled square of the unit
    let out = run(&[
        "solve-wayb",
        file.to_str().unwrap(),
        "--lambda",
        "1",
        "--coeffs",
        "-1,0,1",
    ]);
    let doc: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert_eq!(doc["solutions"].as_array().unwrap().len(), 2);
}

#[test]
fn solve_wayb_respects_support_mask_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "dual.json", DUAL_ALGEBRA);
    let out = run(&[
        "solve-wayb",
        file.to_str().unwrap(),
        "--coeffs",
        "-1,0,1",
        "--support-mask",
        "1:1",
    ]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    // x (x) x squares to zero, so every coefficient solves at weight zero
    assert_eq!(doc["solutions"].as_array().unwrap().len(), 3);

    let out = ibx()
        .args(["solve-wayb", file.to_str().unwrap(), "--coeffs", "-1,0,1"])
        .env("IBX_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn classify_on_the_idempotent_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k.json", K_ALGEBRA);
    let out = run(&[
        "classify",
        file.to_str().unwrap(),
        "--v-dim",
        "1",
        "--grid",
        "0,1",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert_eq!(doc["equivalence_complete"], serde_json::Value::Bool(true));
    assert!(doc["classes"].as_array().unwrap().len() > 1);
    // deterministic output
    let again = run(&[
        "classify",
        file.to_str().unwrap(),
        "--v-dim",
        "1",
        "--grid",
        "0,1",
    ]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn trivial_grid_yields_one_class() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k.json", K_ALGEBRA);
    let out = run(&[
        "classify",
        file.to_str().unwrap(),
        "--v-dim",
        "1",
        "--grid",
        "0",
    ]);
    let doc: serde_json::Value =
        serde_json::from_str(String::from_utf8_lossy(&out.stdout).trim()).unwrap();
    assert_eq!(doc["classes"].as_array().unwrap().len(), 1);
}

#[test]
fn oversize_classify_reports_budget() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "dual.json", DUAL_ALGEBRA);
    let out = ibx()
        .args([
            "classify",
            file.to_str().unwrap(),
            "--v-dim",
            "2",
            "--grid",
            "-1,0,1",
        ])
        .env("IBX_BUDGET", "1000")
        .output()
        .unwrap();
    assert_eq!(code(&out), 4);
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn rmatrix_profile_reports_both_sign_variants() {
    let dir = tempfile::tempdir().unwrap();
    let rm = r#"{
      "format_version": "1",
      "kind": "rmatrix",
      "lambda": "1",
      "spaces": [{"name": "A", "dim": 2, "labels": ["1", "x"]}],
      "tensors": {
        "mu": [[0,0,0,"1"],[0,1,1,"1"],[1,0,1,"1"]],
        "unit": [[0,"1"]],
        "r": [[0,0,"1"]]
      }
    }"#;
    let file = write(dir.path(), "rm.json", rm);
    let out = run(&["check", file.to_str().unwrap(), "--format", "json"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("qt-second-minus-sum"));
    assert!(text.contains("qt-second-plus-diff"));
    assert!(text.contains("zero-braiding"));
}

#[test]
fn unified_constructions_from_extending_files() {
    let dir = tempfile::tempdir().unwrap();
    let datum = r#"{
      "format_version": "1",
      "kind": "extending-datum",
      "variant": "a1",
      "spaces": [
        {"name": "A", "dim": 1, "labels": ["e"]},
        {"name": "V", "dim": 1, "labels": ["v"]}
      ],
      "tensors": {
        "mu": [[0,0,0,"1"]],
        "mu_h": [],
        "tri_l": [[0,0,0,"1"]],
        "tri_r": [[0,0,0,"1"]],
        "theta": [[0,0,0,"1"]]
      }
    }"#;
    let file = write(dir.path(), "datum.json", datum);
    let out_path = dir.path().join("e.json");
    let out = run(&[
        "construct",
        file.to_str().unwrap(),
        "--product",
        "unified-a1",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert!(text.contains("\"kind\": \"algebra\""));
    // this datum is valid, so the embedded report is clean and the output
    // passes the associativity check
    assert!(text.contains("\"ok\": true"));
    let check = run(&["check", out_path.to_str().unwrap()]);
    assert_eq!(code(&check), 0);
}

#[test]
fn bad_profile_for_kind_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "alg.json", DUAL_ALGEBRA);
    let out = run(&["check", file.to_str().unwrap(), "--profile", "bosonisation"]);
    assert_eq!(code(&out), 3);
}
