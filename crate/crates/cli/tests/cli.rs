use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_convolutive"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures/stripped_fixture.txt")
        .to_string_lossy()
        .into_owned()
}

fn column(o: &Output) -> Vec<i64> {
    stdout(o)
        .lines()
        .map(|l| l.split('\t').nth(1).unwrap().parse().unwrap())
        .collect()
}

#[test]
fn expand_partition_numbers() {
    let o = run(&["expand", "1^-1", "-N", "6"]);
    assert!(o.status.success());
    assert_eq!(column(&o), [1, 1, 2, 3, 5, 7, 11]);
}

#[test]
fn expand_empty_and_pdo() {
    assert_eq!(column(&run(&["expand", "", "-N", "3"])), [1, 0, 0, 0]);
    let pdo = column(&run(&["expand", "1^-1 3^-1 4^1 6^2 12^-1", "-N", "13"]));
    assert_eq!(pdo, [1, 1, 2, 4, 5, 8, 12, 16, 22, 32, 42, 56, 76, 98]);
}

#[test]
fn expand_names_bad_token() {
    let o = run(&["expand", "1^-1 3^x", "-N", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("3^x"));
}

#[test]
fn check_exit_codes() {
    for (spec, m) in [("1^-4 2^6 4^-2", "2"), ("1^-2 2^1 3^2 6^-1", "3"), ("1^-1 6^1 10^1 15^-1", "2")] {
        assert_eq!(run(&["check", spec, "-m", m]).status.code(), Some(0), "{spec}");
    }
    let o = run(&["check", "1^1", "-m", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("n = 1"));
    assert_eq!(run(&["check", "1^1"]).status.code(), Some(1));
}

#[test]
fn check_terms_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("terms.txt");
    std::fs::write(&path, "1, 0, 0, 0\n0 0 0 0\n").unwrap();
    let o = run(&["check", "--terms", path.to_str().unwrap(), "-m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::write(&path, "1,1,1,1,1,1").unwrap();
    assert_eq!(run(&["check", "--terms", path.to_str().unwrap(), "-m", "2"]).status.code(), Some(2));
}

#[test]
fn verify_identities_and_bijections() {
    let o = run(&["verify", "--identities", "all", "-N", "150"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    assert!(stdout(&o).contains("thm-A385520"));
    let o = run(&["verify", "--bijections", "glaisher", "-W", "20"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = run(&["verify", "--identities", "eq:f1-2,eq:w-neg", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["identities"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_unknown_names() {
    assert_eq!(run(&["verify", "--identities", "bogus"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--bijections", "bogus"]).status.code(), Some(1));
}

#[test]
fn scan_fixture() {
    let o = run(&["scan", "--corpus", &fixture(), "--fit"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["hits"]["2"], 5);
    assert_eq!(v["summary"]["hits"]["3"], 2);
    let fitted: Vec<&serde_json::Value> = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["filtered_reason"].is_null())
        .map(|r| &r["fitted_eta"])
        .collect();
    assert_eq!(fitted.len(), 7);
    assert!(fitted.iter().all(|f| f.is_object()));

    let o = run(&["scan", "--corpus", &fixture(), "--m", "4,5,6"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for m in ["4", "5", "6"] {
        assert_eq!(v["summary"]["hits"][m], 0);
    }
}

#[test]
fn scan_to_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = run(&["scan", "--corpus", &fixture(), "--fit", "--format", "csv", "--out", p.to_str().unwrap()]);
        assert!(o.status.success());
        assert!(o.stdout.is_empty());
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert!(text.contains("A102186,2,"));
    assert!(text.contains("1^-1 3^-1 4^1 6^2 12^-1"));
}

#[test]
fn scan_bad_input() {
    assert_eq!(run(&["scan", "--corpus", "/nonexistent/stripped"]).status.code(), Some(1));
    assert_eq!(run(&["scan", "--corpus", &fixture(), "--m", "7"]).status.code(), Some(1));
}

#[test]
fn fetch_failures_leave_nothing_behind() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/stripped.gz");
    let o = run(&["fetch", "--url", "http://127.0.0.1:9/x", "--dest", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not exist"));

    let dest = dir.path().join("stripped.gz");
    let o = run(&["fetch", "--url", "http://127.0.0.1:9/x", "--dest", dest.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn help_and_usage() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
}
