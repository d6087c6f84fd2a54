use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn regmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regmod")).args(args).current_dir(root()).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    regmod(args).status.code().unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["--stable", "scenario", "data/scenarios/e0.json", "--run"]), 0);
    assert_eq!(code(&["--stable", "scenario", "data/scenarios/e1.json", "--validate"]), 0);
    assert_eq!(code(&["--stable", "scenario", "data/scenarios/fermat_2_5.json", "--validate"]), 1);
    assert_eq!(code(&["--stable", "scenario", "data/scenarios/noncyclic.json", "--validate"]), 1);
    assert_eq!(code(&["remark", "--p", "3"]), 0);
    assert_eq!(code(&["remark", "--p", "4"]), 2);
    assert_eq!(code(&["dade", "data/dade/worked.json"]), 0);
    assert_eq!(code(&["dade", "data/dade/remark_p3.json"]), 1);
    assert_eq!(code(&["dade", "data/dade/non_faithful.json"]), 1);
    assert_eq!(code(&["chartab", "data/groups/q8.json", "--format", "json"]), 0);
    assert_eq!(code(&["chartab", "data/groups/s8.json", "--format", "json"]), 2);
    assert_eq!(code(&["scenario", "data/scenarios/missing.json", "--validate"]), 2);
}

#[test]
fn malformed_input_is_an_input_error() {
    let dir = std::env::temp_dir().join(format!("regmod-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{ \"schema_version\": 1, ").unwrap();
    let out = regmod(&["--stable", "scenario", bad.to_str().unwrap(), "--validate"]);
    assert_eq!(out.status.code(), Some(2));
    let env: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(env["exit_status"], 2);
    assert!(env["error"].is_string());
    std::fs::write(&bad, r#"{"schema_version": 1, "p": 3, "bogus": true}"#).unwrap();
    assert_eq!(code(&["scenario", bad.to_str().unwrap(), "--validate"]), 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn stable_output_is_byte_identical() {
    for args in [
        &["--stable", "scenario", "data/scenarios/e1.json", "--run"][..],
        &["--stable", "remark", "--p", "5"],
        &["--stable", "dade", "data/dade/worked.json"],
        &["--stable", "chartab", "data/groups/c6.json", "--format", "json"],
    ] {
        let a = regmod(args);
        let b = regmod(args);
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn envelope_fields() {
    let out = regmod(&["--stable", "--seed", "7", "dade", "data/dade/worked.json"]);
    let env: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(env["schema_version"], 1);
    assert_eq!(env["command"], "dade");
    assert_eq!(env["seed"], 7);
    assert_eq!(env["exit_status"], 0);
    assert_eq!(env["input_sha256"].as_str().unwrap().len(), 64);
    assert!(env.get("timings_ms").is_none_or(|t| t.is_null()));
}

#[test]
fn flag_conflicts_are_rejected() {
    assert_eq!(code(&["scenario", "data/scenarios/e0.json", "--validate", "--run"]), 2);
    assert_eq!(code(&["scenario", "data/scenarios/e0.json", "--force"]), 2);
}
