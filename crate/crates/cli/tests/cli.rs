use std::process::{Command, Output};

use riordan_core::RiordanArray;

fn riordan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_riordan"))
        .args(args)
        .env("OEIS_OFFLINE", "1")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn array_table() {
    let o = riordan(&["array", "--poly", "1,5"]);
    assert_eq!(o.status.code(), Some(0));
    let last = stdout(&o).lines().last().unwrap().to_string();
    let cells: Vec<&str> = last.split_whitespace().collect();
    assert_eq!(cells, ["1", "5", "26", "140", "151", "25", "1"]);
}

#[test]
fn array_json_round_trips() {
    let o = riordan(&["--format", "json", "array", "--poly", "-1/3,2/3,2/3", "--rows", "10", "--cols", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let arr = RiordanArray::from_json(&text).unwrap();
    assert_eq!(arr.to_json(), text.trim_end());
}

#[test]
fn out_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.csv");
    let o = riordan(&["--format", "csv", "--out", path.to_str().unwrap(), "array", "--poly", "1,5", "--rows", "3", "--cols", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "1,0,0\n0,1,0\n1,5,1\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["array", "--poly", "1.5"][..],
        &["array", "--poly", "0,1"],
        &["verify", "--poly", "0,1", "theorem1"],
        &["classify", "--poly", "1,2,3,4"],
        &["array"],
    ] {
        assert_eq!(riordan(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn mismatch_exits_1() {
    let o = riordan(&["oeis", "--id", "A000108", "--terms", "1,1,2,6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdict: mismatch"));
}

#[test]
fn offline_without_fixture_exits_3() {
    let o = riordan(&["oeis", "--id", "A000045", "--terms", "0,1,1,2"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn oeis_sources_match() {
    for (id, src) in [("A001700", "theorem6"), ("A088218", "csum1"), ("A002740", "csum2"), ("A000108", "catalan")] {
        let o = riordan(&["--format", "json", "oeis", "--id", id, "--from", src]);
        assert_eq!(o.status.code(), Some(0), "{id}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["verdict"], "match", "{id}");
    }
}

#[test]
fn verify_checks_pass() {
    for args in [
        &["verify", "--poly", "1,5", "theorem1"][..],
        &["verify", "--poly", "1/2,-1/2", "theorem2"],
        &["verify", "prop5"],
        &["verify", "--poly", "1,5", "rogers"],
        &["verify", "--poly", "1,1", "theorem6"],
        &["verify", "--poly", "2,3", "catalan"],
        &["verify", "--poly", "1,-2,3", "fourier"],
    ] {
        let o = riordan(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert!(stdout(&o).contains("status: pass"), "{args:?}");
    }
}

#[test]
fn classify_quadratic_json() {
    let o = riordan(&["--format", "json", "classify", "--poly", "93/100,1/2,-19/50"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["zscale"], "21/20");
}

#[test]
fn az_display() {
    let o = riordan(&["--format", "csv", "az", "--poly", "1,1", "--order", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let a: Vec<String> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(1).unwrap().to_string()).collect();
    assert_eq!(a, ["1", "1", "-1", "2", "-5", "14"]);
}
