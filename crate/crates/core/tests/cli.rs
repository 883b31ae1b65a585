use std::fs;
use std::process::Command;

use serde_json::Value;

fn lab() -> Command {
    Command::new(env!("CARGO_BIN_EXE_unitgroup-lab"))
}

#[test]
fn all_writes_one_entry_per_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let status = lab().args(["verify", "all", "--max-n", "5", "--json"]).arg(&path).output().unwrap().status;
    assert_eq!(status.code(), Some(0));
    let reports: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let ids: Vec<&str> = reports.as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["c5", "s3", "sn/5", "an/5", "s4", "a4", "a8"]);
    for r in reports.as_array().unwrap() {
        for key in ["id", "anchor", "inputs", "facts", "verdict", "ms"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert!(r["anchor"]["section"].is_string() && r["anchor"]["quote"].is_string());
        assert_eq!(r["verdict"], "pass");
    }
}

#[test]
fn runs_are_byte_identical_without_timing() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for (k, threads) in ["1", "2"].iter().enumerate() {
        let path = dir.path().join(format!("run{k}.json"));
        let status = lab()
            .args(["verify", "an", "--max-n", "8", "--no-timing", "--threads", threads, "--json"])
            .arg(&path)
            .output()
            .unwrap()
            .status;
        assert_eq!(status.code(), Some(0));
        outputs.push(fs::read(&path).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
    let reports: Value = serde_json::from_slice(&outputs[0]).unwrap();
    assert_eq!(reports[3]["id"], "an/8");
    assert_eq!(reports[3]["verdict"], "obstructed");
}

#[test]
fn usage_errors_exit_with_2() {
    for args in [
        vec!["verify", "s5"],
        vec!["verify", "sn", "--max-n", "10"],
        vec!["verify", "sn", "--max-n", "4"],
        vec!["verify", "c5", "--threads", "0"],
        vec!["frobnicate"],
    ] {
        let out = lab().args(&args).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn single_claim_prints_a_verdict_line() {
    let out = lab().args(["verify", "c5"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("c5") && stdout.contains("pass"));
}

#[test]
fn unwritable_json_path_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("out.json");
    let out = lab().args(["verify", "c5", "--json"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
