use std::process::Command;

use spt_kernel::cli::{run, run_with_checks, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use spt_kernel::verify::{corrupted_sb_at_zeta3, verify_theorem1_with, Check};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["spt-kernel"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn table_row_eight_mod_five() {
    let (code, out, _) = invoke(&["table", "--order", "8", "--t", "5"]);
    assert_eq!(code, EXIT_OK);
    let last = out.lines().last().unwrap();
    assert!(last.trim_start().starts_with("8 "), "{last}");
    assert!(last.ends_with("[5, 3, 2, 2, 3]"), "{last}");
}

#[test]
fn table_row_four_is_balanced() {
    let (code, out, _) = invoke(&["table", "--order", "4", "--t", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.lines().last().unwrap().ends_with("[1, 1, 1]"));
}

#[test]
fn table_csv_and_json() {
    let (_, csv, _) = invoke(&["table", "--order", "8", "--t", "5", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,sptbar2,\"N(0,5,n)\",\"N(1,5,n)\",\"N(2,5,n)\",\"N(3,5,n)\",\"N(4,5,n)\""));
    assert_eq!(csv.lines().last(), Some("8,15,5,3,2,2,3"));

    let (_, json, _) = invoke(&["table", "--order", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["rows"][3]["sptbar2"], "3");
    assert_eq!(v["rows"][3]["classes"], serde_json::json!(["1", "1", "1"]));
}

#[test]
fn order_zero_is_a_usage_error() {
    let (code, _, err) = invoke(&["table", "--order", "0"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
}

#[test]
fn verify_below_minimum_order_is_a_usage_error() {
    let (code, out, err) = invoke(&["verify", "--order", "5"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("--order"));
}

#[test]
fn verify_single_check() {
    let (code, out, _) = invoke(&["verify", "--order", "30", "--only", "theorem1"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 1);
    assert_eq!(out.trim(), r#"{"check":"theorem1","order":30,"status":"pass","first_failure":null}"#);
}

#[test]
fn verify_unknown_check() {
    let (code, out, err) = invoke(&["verify", "--only", "theorem9"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(out.is_empty());
    assert!(err.contains("theorem9"));
}

#[test]
fn verify_text_summary() {
    let (code, out, _) = invoke(&["verify", "--order", "30", "--oracle-bound", "8", "--format", "text"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("8 of 8 checks passed\n"), "{out}");
    assert!(out.contains("mod-5 crank refinement fails"));
}

#[test]
fn corrupted_series_fails_with_location() {
    let checks = [Check {
        name: "theorem1",
        run: |c| verify_theorem1_with(&corrupted_sb_at_zeta3(c.order, 7)),
    }];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with_checks(["spt-kernel", "verify", "--order", "20"], &checks, &mut out, &mut err);
    assert_eq!(code, EXIT_FAILED);
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["status"], "fail");
    assert_eq!(v["first_failure"]["n"], 7);
    assert_eq!(v["first_failure"]["expected"], "[0, 0]");
    assert_eq!(v["first_failure"]["actual"], "[1, 0]");

    let (mut out, mut err) = (Vec::new(), Vec::new());
    let args = ["spt-kernel", "verify", "--order", "20", "--format", "csv"];
    assert_eq!(run_with_checks(args, &checks, &mut out, &mut err), EXIT_FAILED);
    assert_eq!(String::from_utf8(out).unwrap().lines().nth(1), Some("theorem1,20,fail,7,\"[0, 0]\",\"[1, 0]\""));
}

#[test]
fn export_components() {
    let (code, out, _) = invoke(&["export", "--what", "A2", "--order", "10"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(&lines[..3], ["n,coefficient", "0,1", "1,2"]);
    assert_eq!(lines.len(), 12);

    let (_, out, _) = invoke(&["export", "--what", "spt2", "--order", "10"]);
    assert!(out.lines().any(|l| l == "4,3"));
    assert!(out.lines().any(|l| l == "5,2"));
    assert!(out.lines().any(|l| l == "8,15"));

    let (_, out, _) = invoke(&["export", "--what", "M2crank0", "--order", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["coefficients"][0], "1");
}

#[test]
fn export_sb_table() {
    let (code, out, _) = invoke(&["export", "--what", "sb", "--order", "4"]);
    assert_eq!(code, EXIT_OK);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines, ["n,m,coefficient", "2,0,1", "4,-1,1", "4,0,1", "4,1,1"]);
}

#[test]
fn writes_to_file() {
    let dir = std::env::temp_dir().join(format!("spt-kernel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("spt2.csv");
    let p = path.to_str().unwrap();
    let (code, out, _) = invoke(&["export", "--what", "spt2", "--order", "8", "--out", p]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().ends_with("8,15\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn unwritable_output_path() {
    let (code, _, err) = invoke(&["export", "--what", "A2", "--out", "/nonexistent-dir/x/a2.csv"]);
    assert_ne!(code, EXIT_OK);
    assert!(err.contains("cannot write"));
}

#[test]
fn verify_is_deterministic() {
    let a = invoke(&["verify", "--order", "40", "--oracle-bound", "10"]);
    let b = invoke(&["verify", "--order", "40", "--oracle-bound", "10"]);
    assert_eq!(a, b);
    assert_eq!(a.1.lines().count(), 8);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_spt-kernel");
    let ok = Command::new(bin).args(["table", "--order", "8", "--t", "5"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("[5, 3, 2, 2, 3]"));
    let bad = Command::new(bin).args(["verify", "--only", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    let help = Command::new(bin).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(EXIT_OK));
}
