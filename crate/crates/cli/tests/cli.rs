use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_frattini-lab");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).env_remove("FRATTINI_LAB_THREADS").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn golden_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/default_report.json")
}

/// Runs the default corpus and returns the JSON report.
fn default_report(extra: &[&str]) -> String {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("report.json");
    let mut args = extra.to_vec();
    args.extend(["verify", "--out", path.to_str().unwrap()]);
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stderr(&out).contains("0 fail"), "{}", stderr(&out));
    fs::read_to_string(&path).unwrap()
}

/// Set UPDATE_GOLDEN=1 to regenerate the committed report.
#[test]
fn default_corpus_matches_golden_report() {
    let report = default_report(&[]);
    let golden = golden_path();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(golden.parent().unwrap()).unwrap();
        fs::write(&golden, &report).unwrap();
        return;
    }
    let expected = fs::read_to_string(&golden).expect("golden report exists; regenerate with UPDATE_GOLDEN=1");
    if report != expected {
        let got: Vec<Value> = serde_json::from_str(&report).unwrap();
        let want: Vec<Value> = serde_json::from_str(&expected).unwrap();
        assert_eq!(got.len(), want.len(), "record count changed");
        for (g, w) in got.iter().zip(&want) {
            assert_eq!(g, w, "first differing record");
        }
        panic!("report differs from golden in formatting only");
    }
}

#[test]
fn sequential_and_parallel_reports_are_identical() {
    let parallel = default_report(&[]);
    let sequential = default_report(&["--sequential"]);
    assert_eq!(parallel, sequential);
}

#[test]
fn verify_prints_text_reports() {
    let out = run(&["verify", "--group", "sym(4)", "--group", "q8", "--checks", "profile,thmA", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("group"), "{text}");
    assert!(text.lines().any(|l| l.starts_with("q8") && l.contains("thmA") && l.contains("skipped")), "{text}");
    assert_eq!(text.lines().last().unwrap(), "3 pass / 0 fail / 1 skipped");
}

#[test]
fn budget_flags_turn_checks_into_skips() {
    let out = run(&["verify", "--checks", "wolf", "--lattice-budget", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let records: Vec<Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["status"], "skipped");

    let group = "direct_product(cyclic(3),cyclic(3),sym(3))";
    let out = run(&["verify", "--group", group, "--checks", "thmA", "--aut-budget", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let records: Vec<Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(records[0]["status"], "skipped");
    let out = run(&["verify", "--group", group, "--checks", "thmA"]);
    let records: Vec<Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(records[0]["status"], "pass");
}

#[test]
fn group_files_and_config_files() {
    let dir = TempDir::new().unwrap();
    let group = dir.path().join("s3.json");
    fs::write(&group, r#"{"degree": 3, "generators": [[2, 3, 1], [2, 1, 3]], "name": "S3"}"#).unwrap();
    let arg = format!("file:{}", group.display());
    let out = run(&["verify", "--group", &arg, "--checks", "profile,tate"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));

    let config = dir.path().join("suite.json");
    fs::write(&config, r#"{"groups": ["s3.json", "cyclic(6)"], "checks": ["thmB"], "format": "text"}"#).unwrap();
    let out = run(&["verify", "--config", config.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).lines().last().unwrap(), "2 pass / 0 fail / 0 skipped");
}

#[test]
fn configuration_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"degree\": 3,\n \"generators\": [[1, 1, 2]]}").unwrap();
    let bad_arg = format!("file:{}", bad.display());
    let cases: Vec<Vec<&str>> = vec![
        vec!["verify", "--group", "nope(3)"],
        vec!["verify", "--group", "sym(4", "--checks", "profile"],
        vec!["verify", "--group", "sym(4)", "--checks", "thmZ"],
        vec!["verify", "--group", "sym(4)", "--checks", ""],
        vec!["verify", "--group", "sym(4)", "--format", "yaml"],
        vec!["verify", "--group", &bad_arg],
        vec!["verify", "--config", "/no/such/suite.json"],
        vec!["info", "cyclic(0)"],
        vec!["frobnicate"],
    ];
    for args in cases {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", stderr(&out));
        assert!(!stderr(&out).is_empty(), "{args:?}");
    }
    let out = run(&["verify", "--group", &bad_arg]);
    assert!(stderr(&out).contains("generators[0]"), "{}", stderr(&out));
}

#[test]
fn invalid_thread_count_is_a_configuration_error() {
    let out = Command::new(BIN).args(["info", "sym(3)"]).env("FRATTINI_LAB_THREADS", "0").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(BIN).args(["info", "sym(3)"]).env("FRATTINI_LAB_THREADS", "2").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn info_reports_the_profile() {
    let out = run(&["info", "paper_example(2,1)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("order             120"), "{text}");
    assert!(text.contains("d_2 = 2, d_3 = 1, d_5 = 1"), "{text}");

    let out = run(&["info", "sl23", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["order"], "24");
    assert_eq!(v["d_p"]["2"], 2);
    assert_eq!(v["nilpotent"], false);
    assert_eq!(v["frattini_order"], "2");
}

#[test]
fn vdovin_oracle() {
    let out = run(&["oracle", "vdovin", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "pass");
    let out = run(&["oracle", "vdovin", "40"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "skipped");
}
