use std::path::PathBuf;
use std::process::{Command, Output};

use bwf_cli::tensor_file::TensorFile;
use bwf_core::spin2::outer;
use bwf_core::{BigRational, Complex};
use serde_json::Value;

fn bwf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bwf")).args(args).output().expect("bwf runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = bwf(&full);
    let code = out.status.code().expect("exit code");
    (code, serde_json::from_slice(&out.stdout).unwrap_or(Value::Null))
}

fn records<'a>(report: &'a Value, name: &str) -> Vec<&'a Value> {
    report["records"].as_array().unwrap().iter().filter(|r| r["name"] == name).collect()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bwf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn identities_pass_under_both_epsilon_signs() {
    for sign in ["+", "-"] {
        let (code, report) = json(&["identities", "--epsilon-sign", sign]);
        assert_eq!(code, 0);
        assert_eq!(report["summary"]["pass"], 21);
        assert_eq!(report["summary"]["fail"], 0);
    }
}

#[test]
fn literal_duality_fails_when_epsilon_is_flipped() {
    assert_eq!(bwf(&["identities", "--roundtrip"]).status.code(), Some(0));
    let (code, report) = json(&["identities", "--roundtrip", "--epsilon-sign", "-"]);
    assert_eq!(code, 1);
    assert_eq!(records(&report, "chiral sigma duality")[0]["status"], "fail");
}

#[test]
fn config_errors_exit_with_two() {
    let bad_config = scratch("bad.json");
    std::fs::write(&bad_config, r#"{"bogus": 1}"#).unwrap();
    for args in [
        vec!["residual", "--momentum", "1,2,2"],
        vec!["residual", "--momentum", "3,4,0,0"],
        vec!["derive", "--bound", "0"],
        vec!["derive", "--classical", "--coeffs", "1,0,0,1/2"],
        vec!["spin2", "--g-from", "/nonexistent/g.json"],
        vec!["identities", "--config", bad_config.to_str().unwrap()],
        vec!["identities", "--no-such-flag"],
    ] {
        assert_eq!(bwf(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn timelike_polarization_is_the_momentum_for_unit_ratio() {
    let (code, report) = json(&["polarization", "--momentum", "1,2,2,4", "--norm", "m"]);
    assert_eq!(code, 0);
    let vectors = &records(&report, "polarization vectors")[0]["data"]["vectors"];
    assert_eq!(vectors["0t"]["u"], serde_json::json!(["5", "1", "2", "2"]));
    assert_eq!(vectors["0"]["u"], serde_json::json!(["2", "2/9", "4/9", "40/9"]));
}

#[test]
fn longitudinal_tensor_supplied_as_g_is_reported() {
    let q = |n: i64| Complex::new(BigRational::from_integer(n.into()), BigRational::from_integer(0.into()));
    let p_lower = [5, -1, -2, -2].map(q);
    let p_upper = [5, 1, 2, 2].map(q);
    let g = outer(&p_lower, &p_upper);
    let path = scratch("pp.json");
    std::fs::write(&path, serde_json::to_string(&TensorFile::from_lower_upper("pp", &g).unwrap()).unwrap()).unwrap();

    let (code, report) = json(&["spin2", "--momentum", "1,2,2,4", "--g-from", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    let supplied = records(&report, "supplied G");
    assert_eq!(supplied.len(), 1);
    assert_eq!(supplied[0]["status"], "fail");
    assert_eq!(supplied[0]["data"]["residual_equals_minus_g"], true);
    assert_eq!(supplied[0]["data"]["transverse"], false);
}

#[test]
fn file_values_yield_to_flags() {
    let path = scratch("config.json");
    std::fs::write(&path, r#"{"momentum": ["3,4,0,12"], "norm": "1", "format": "json", "seed": 5}"#).unwrap();
    let cfg = path.to_str().unwrap();

    let out = bwf(&["polarization", "--config", cfg]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["config"]["norm"], "1");
    assert_eq!(report["config"]["seed"], 5);
    assert_eq!(records(&report, "polarization vectors")[0]["momentum"], "(3,4,0;m=12)");

    let out = bwf(&["polarization", "--config", cfg, "--norm", "m", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("(3,4,0;m=12)"));
    assert!(text.lines().last().unwrap().starts_with("summary:"));
}

#[test]
fn generic_coefficients_are_informational() {
    let (code, report) = json(&["derive", "--coeffs", "1,1,1,1", "--bound", "1"]);
    assert_eq!(code, 0);
    assert!(!records(&report, "derived system dimensions").is_empty());
    for r in records(&report, "derivation diff") {
        assert_ne!(r["data"]["verdict"], "mismatch");
    }
}

#[test]
fn two_mass_residuals_depend_on_the_second_mass() {
    let args = ["residual", "--system", "spin1-twomass", "--momentum", "1,2,2,4"];
    let (code, report) = json(&args);
    assert_eq!(code, 0);
    assert_eq!(records(&report, "divergence probe Psi = p")[0]["status"], "pass");

    let mut with_m2 = args.to_vec();
    with_m2.extend(["--m2", "1"]);
    let (code, report) = json(&with_m2);
    assert_eq!(code, 1);
    assert!(report["summary"]["fail"].as_u64().unwrap() > 0);
}

#[test]
fn output_file_matches_stdout() {
    let path = scratch("out.json");
    let (_, direct) = json(&["spin2", "--bound", "1"]);
    let out = bwf(&["spin2", "--bound", "1", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written, direct);
}

#[test]
fn approximate_mode_agrees_on_verdicts() {
    let (code, report) = json(&["residual", "--mode", "approx", "--bound", "1"]);
    assert_eq!(code, 0);
    assert_eq!(report["summary"]["fail"], 0);
}
