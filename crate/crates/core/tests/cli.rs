use std::path::Path;
use std::process::{Command, Output};

fn ncgrass(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncgrass")).args(args).env_remove("NCGRASS_SEED").output().expect("binary runs")
}

const GOLDEN_ARGS: [&str; 10] = ["--suite", "all", "--seed", "42", "--trials", "2", "--max-n", "3", "--dims", "4:2"];

fn golden() -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/all_seed42.json")).unwrap()
}

#[test]
fn fixed_seed_matches_golden_report() {
    let out = ncgrass(&GOLDEN_ARGS);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden());
}

#[test]
fn out_file_and_env_seed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut args: Vec<&str> = GOLDEN_ARGS.iter().copied().filter(|a| *a != "--seed" && *a != "42").collect();
    let p = path.to_str().unwrap().to_string();
    args.extend(["--out", &p]);
    let status = Command::new(env!("CARGO_BIN_EXE_ncgrass")).args(&args).env("NCGRASS_SEED", "42").status().unwrap();
    assert_eq!(status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden());
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "suite = \"all\"\nseed = 7\ntrials = 2\nmax_n = 3\ndims = \"4:2\"\n").unwrap();
    let out = ncgrass(&["--config", cfg.to_str().unwrap(), "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden());
}

#[test]
fn zero_trials() {
    let out = ncgrass(&["--trials", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["checks"], serde_json::json!([]));
    assert_eq!(v["summary"]["total"], 0);
}

#[test]
fn quasidet_example_run() {
    let out = ncgrass(&["--suite", "quasidet", "--seed", "42", "--dims", "4:2", "--trials", "10", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["suite"] == "quasidet"));
}

#[test]
fn config_errors_exit_2() {
    for args in [
        vec!["--dims", "3:3"],
        vec!["--dims", "4"],
        vec!["--suite", "nope"],
        vec!["--format", "yaml"],
        vec!["--max-n", "0"],
        vec!["--out", "/nonexistent-dir/x/report.json"],
        vec!["--config", "/nonexistent-dir/run.toml"],
    ] {
        let out = ncgrass(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}: no suite should run");
        assert!(String::from_utf8_lossy(&out.stderr).contains("ncgrass:"));
    }
    let out = Command::new(env!("CARGO_BIN_EXE_ncgrass")).args(["--trials", "0"]).env("NCGRASS_SEED", "abc").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn injected_fault_fails_with_named_anchors() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("fault.toml");
    std::fs::write(&cfg, "inject_fault = true\ntrials = 1\nmax_n = 3\ndims = \"4:2\"\n").unwrap();
    let out = ncgrass(&["--config", cfg.to_str().unwrap(), "--format", "text"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("failing: quantum determinant is central"), "{stderr}");
    assert!(stderr.contains("quasi-Plücker relations specialize to quantum Young relations"), "{stderr}");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("fail")));
}

#[test]
fn timings_fill_elapsed() {
    let out = ncgrass(&["--suite", "classical", "--trials", "1", "--max-n", "2", "--timings"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["elapsed_ms"].is_u64()));
}
