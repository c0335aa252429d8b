use std::path::Path;
use std::process::{Command, Output};

use pi_verify::{CheckReport, Status};

fn pi_verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pi-verify")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn read_report(path: &Path) -> CheckReport {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).expect("report parses strictly")
}

#[test]
fn passing_check_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("te.json");
    let out = pi_verify(&["check", "thm_TE", "--degree-max", "5", "--report", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let r = read_report(&path);
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.computed["codim_parity"], serde_json::json!([2, 4, 8, 16]));
    assert_eq!(r.expected["codim_parity"].provenance, pi_verify::Provenance::Literature);
    assert_eq!(r.params["degree_max"], "5");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(code(&pi_verify(&["check", "no_such_check"])), 2);
    assert_eq!(code(&pi_verify(&["check", "thm_TE", "--param", "k=1"])), 2);
    assert_eq!(code(&pi_verify(&["check", "main_theorem", "--param", "n=3"])), 2);
    assert_eq!(code(&pi_verify(&["check", "lemma_f1", "--param", "n"])), 2);
    assert_eq!(code(&pi_verify(&["suite", "medium"])), 2);
    assert_eq!(code(&pi_verify(&["bogus"])), 2);
    assert_eq!(code(&pi_verify(&["eval", "--poly", "[x1,", "--algebra", "UT2", "--tuple", "0"])), 2);
}

#[test]
fn degree_cap_skips_without_force() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("skip.json");
    let out = pi_verify(&["check", "cochar_A", "--param", "m=9", "--report", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(read_report(&path).status, Status::Skipped);
}

#[test]
fn reports_are_reproducible_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for threads in ["1", "3", "1"] {
        let path = dir.path().join(format!("an-{threads}-{}.json", reports.len()));
        let p = path.to_str().unwrap();
        let out = pi_verify(&["check", "an_equivalence", "--degree-max", "5", "--threads", threads, "--report", p]);
        assert_eq!(code(&out), 0);
        reports.push(read_report(&path).timeless());
    }
    assert_eq!(reports[0], reports[1]);
    assert_eq!(reports[0], reports[2]);
    let first = serde_json::to_string(&reports[0]).unwrap();
    assert_eq!(first, serde_json::to_string(&reports[2]).unwrap());
}

#[test]
fn eval_prints_the_value() {
    // basis of UT2 is e11, e12, e22
    let out = pi_verify(&["eval", "--poly", "[x1,x2]", "--algebra", "UT2", "--tuple", "0,1"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).trim_end().ends_with("= e12"));
    let out = pi_verify(&["eval", "--poly", "[x1,x2]", "--algebra", "UT2", "--tuple", "0"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn list_names_every_check() {
    let out = pi_verify(&["list"]);
    let text = String::from_utf8_lossy(&out.stdout);
    for c in pi_verify::CHECKS {
        assert!(text.contains(c.name));
    }
}

#[test]
fn fast_suite_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fast.json");
    let out = pi_verify(&["suite", "fast", "--report", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let reports: Vec<CheckReport> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(reports.len(), pi_verify::CHECKS.len());
    assert!(reports.iter().all(|r| r.status != Status::Fail));
}
