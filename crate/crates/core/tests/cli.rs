//! The `rbb` binary: output formats, exit codes and fault injection.

use std::process::{Command, Output};

use rbb::identities::report::ReportRecord;

fn rbb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rbb")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn bodies(o: &Output) -> Vec<String> {
    stdout(o).lines().map(|l| l.split(",\"elapsed_ms\"").next().unwrap().to_string()).collect()
}

#[test]
fn table_commands() {
    let o = rbb(&["table", "bernoulli-numbers", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "B_0 = 1\nB_1 = -1/2\nB_2 = 1/6\nB_3 = 0\nB_4 = -1/30\n");
    assert_eq!(stdout(&rbb(&["table", "power-sums", "1"])), "F_0 = m\nF_1 = 1/2*m^2 + 1/2*m\n");
    assert_eq!(stdout(&rbb(&["table", "bernoulli-polys", "2"])).lines().last(), Some("B_2(x) = x^2 - x + 1/6"));
    assert_eq!(rbb(&["table", "catalan", "4"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = rbb(&["verify", "miki", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS miki(4): zero"));
    let o = rbb(&["verify", "miki", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains(">= 4"));
    assert_eq!(rbb(&["verify", "bogus", "1"]).status.code(), Some(2));
    assert_eq!(rbb(&["verify", "nielsen", "1"]).status.code(), Some(2));
    assert_eq!(rbb(&["verify", "nielsen", "0", "2"]).status.code(), Some(2));
}

#[test]
fn failing_verification_prints_difference_and_witness() {
    let o = rbb(&["verify", "triple-integral", "1", "1", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("difference: 1/360*x"), "{out}");
    assert!(out.contains("witness: x^1"));
    let o = rbb(&["verify", "triple-integral-linear", "1", "1", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn expected_constants_are_reported() {
    let o = rbb(&["verify", "triple-product", "1", "1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("constant: "));
    let o =
        rbb(&["sweep", "--identity", "triple-product", "--range", "i=1..2", "--range", "j=1..2", "--range", "k=1..2"]);
    for line in stdout(&o).lines() {
        let r: ReportRecord = serde_json::from_str(line).unwrap();
        assert!(r.constant.is_some(), "{line}");
    }
}

#[test]
fn sweep_nielsen_grid_and_json_round_trip() {
    let o = rbb(&["sweep", "--identity", "nielsen", "--range", "i=1..10", "--range", "j=1..10"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<_> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 100);
    for line in &lines {
        let record: ReportRecord = serde_json::from_str(line).unwrap();
        assert!(record.pass);
        assert_eq!(record.class, "zero");
        assert_eq!(serde_json::to_string(&record).unwrap(), *line);
    }
    assert!(stderr(&o).contains("summary: 100 checked, 100 passed, 0 failed; nielsen 100/100 max="));
}

#[test]
fn sweep_is_deterministic_across_worker_counts() {
    let args = |w| vec!["sweep", "--identity", "agoh", "--workers", w];
    let one = rbb(&args("1"));
    let many = rbb(&args("7"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(bodies(&one), bodies(&many));
    assert_eq!(bodies(&one).len(), 861);
    let csv1 = rbb(&["sweep", "--identity", "gessel", "--format", "csv", "--workers", "1"]);
    let csv3 = rbb(&["sweep", "--identity", "gessel", "--format", "csv", "--workers", "3"]);
    let strip = |o: &Output| stdout(o).lines().map(|l| l.rsplit_once(',').unwrap().0.to_string()).collect::<Vec<_>>();
    assert_eq!(strip(&csv1), strip(&csv3));
}

#[test]
fn csv_and_text_formats() {
    let o = rbb(&[
        "sweep",
        "--identity",
        "triple-integral",
        "--range",
        "i=1..1",
        "--range",
        "j=1..1",
        "--range",
        "k=1..2",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("identity,params,class,constant,difference"));
    assert!(lines.next().unwrap().starts_with("triple-integral,1 1 1,"));
    assert!(lines.next().unwrap().starts_with("triple-integral,1 1 2,nonconstant,,\"1/360*x\",1,"));
    let o = rbb(&["sweep", "--identity", "miki", "--range", "N=4..5", "--format", "text"]);
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 2);
}

#[test]
fn sweep_usage_errors() {
    assert_eq!(rbb(&["sweep", "--identity", "nope"]).status.code(), Some(2));
    assert_eq!(rbb(&["sweep", "--identity", "miki", "--range", "Q=1..3"]).status.code(), Some(2));
    assert_eq!(rbb(&["sweep", "--identity", "miki", "--range", "N=9..3"]).status.code(), Some(2));
    assert_eq!(rbb(&["sweep", "--workers", "0"]).status.code(), Some(2));
    assert_eq!(rbb(&["sweep", "--format", "xml"]).status.code(), Some(2));
}

#[test]
fn cache_write_check_and_faults() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.tsv");
    let p = path.to_str().unwrap();
    assert_eq!(rbb(&["cache", "write", p, "40"]).status.code(), Some(0));
    assert_eq!(rbb(&["cache", "check", p, "40"]).status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("0\t1\n1\t-1/2\n2\t1/6\n"));

    std::fs::write(&path, text.replacen("2\t1/6", "2\t1/5", 1)).unwrap();
    let o = rbb(&["cache", "check", p, "40"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    std::fs::write(&path, "0\t1\n1\tbanana\n").unwrap();
    let o = rbb(&["cache", "check", p, "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    std::fs::write(&path, "").unwrap();
    assert_eq!(rbb(&["cache", "check", p, "5"]).status.code(), Some(0));
}

#[test]
fn fail_fast_with_corrupted_cache() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.tsv");
    let p = path.to_str().unwrap();
    assert_eq!(rbb(&["cache", "write", p, "60"]).status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, text.replacen("2\t1/6", "2\t1/5", 1)).unwrap();

    let full = rbb(&["sweep", "--identity", "nielsen", "--workers", "2", "--cache", p]);
    let ff = rbb(&["sweep", "--identity", "nielsen", "--workers", "2", "--fail-fast", "--cache", p]);
    assert_eq!(full.status.code(), Some(1));
    assert_eq!(ff.status.code(), Some(1));
    // Either load-time validation catches the entry, or the run stops at its
    // first failing report.
    if !ff.stdout.is_empty() {
        assert!(bodies(&ff).len() < bodies(&full).len());
        assert!(bodies(&ff).last().unwrap().contains("\"pass\":false"));
    } else {
        assert!(stderr(&ff).contains("line 3"));
    }

    let o = Command::new(env!("CARGO_BIN_EXE_rbb")).args(["verify", "miki", "4"]).env("RBB_CACHE", p).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}
