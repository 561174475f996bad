use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn cograph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cograph")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cograph(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_prints_the_integer() {
    assert_eq!(stdout(&["count", "--points", "5"]), "1299\n");
}

#[test]
fn tc_prints_index_and_order() {
    assert_eq!(stdout(&["tc", "--p", "4", "--q", "6", "--n", "6"]), "index=18 order=72\n");
    let felsch = stdout(&["tc", "--p", "4", "--q", "12", "--n", "3", "--strategy", "felsch", "--table"]);
    assert!(felsch.starts_with("index=9 order=36\ncoset P P^-1 Q Q^-1\n"));
    assert_eq!(felsch.lines().count(), 2 + 9);
}

#[test]
fn tc_accepts_relators() {
    assert_eq!(stdout(&["tc", "--relator", "PP", "--relator", "QQQ", "--relator", "PQPQ"]), "index=3 order=6\n");
}

#[test]
fn coset_cap_comes_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_cograph"))
        .args(["tc", "--p", "4", "--q", "6", "--n", "6"])
        .env("COGRAPH_COSET_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeded 10"));
}

#[test]
fn json_report_has_schema_and_verification() {
    let v: Value = serde_json::from_str(&stdout(&["--json", "--verify", "tc", "--p", "4", "--q", "6", "--n", "6"])).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["result"]["index"], 18);
    assert_eq!(v["result"]["order"], 72);
    assert_eq!(v["result"]["structure"]["s_order"], 6);
    assert_eq!(v["verification"]["run"], v["verification"]["passed"]);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cograph(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cograph(&["count"]).status.code(), Some(2));
    assert_eq!(cograph(&["sum", "classify", "--in", "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn enumerate_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c4.txt");
    stdout(&["enumerate", "--points", "4", "--out", file.to_str().unwrap()]);
    let text = fs::read_to_string(&file).unwrap();
    assert_eq!(text.lines().count(), 25);
    let checked = stdout(&["--verify", "isect", "check", "--in", file.to_str().unwrap()]);
    assert_eq!(checked.lines().filter(|l| l.contains("representable=true")).count(), 15);
    assert!(checked.ends_with("verified 25/25\n"));
    let pl = stdout(&["pl", "validate", "--in", file.to_str().unwrap()]);
    assert_eq!(pl.lines().filter(|l| l.contains("pl=true")).count(), 3);
}

#[test]
fn sum_classify_reproduces_catalogue() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("s4.txt");
    let catalogue = stdout(&["sum", "catalogue", "--points", "4"]);
    fs::write(&file, &catalogue).unwrap();
    let out = stdout(&["--verify", "sum", "classify", "--in", file.to_str().unwrap()]);
    let (body, last) = out.trim_end().rsplit_once('\n').unwrap();
    assert_eq!(format!("{body}\n"), catalogue);
    let (passed, run) = last.strip_prefix("verified ").unwrap().split_once('/').unwrap();
    assert_eq!(passed, run);
}

#[test]
fn represent_modes() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("p.txt");
    fs::write(&file, "n=3;{01},{02},{12}\n").unwrap();
    let f = file.to_str().unwrap();
    assert!(stdout(&["--verify", "represent", "--mode", "ip", "--in", f]).ends_with("verified 1/1\n"));
    assert!(stdout(&["--verify", "represent", "--mode", "poly", "--in", f]).ends_with("verified 4/4\n"));
    let sum = stdout(&["represent", "--mode", "sum", "--in", f, "--values", "1,2,3"]);
    assert_eq!(sum, "n=3;{01},{02},{12} points=(0,1,2;Z)\n");
    let dist = stdout(&["--verify", "represent", "--mode", "dist", "--in", f, "--values", "1,3,2"]);
    assert!(dist.starts_with("n=3;{01},{02},{12} points="), "{dist}");
    assert!(dist.ends_with("verified 3/3\n"));
}

#[test]
fn pl_commands() {
    assert_eq!(stdout(&["pl", "catalogue", "--points", "7"]).lines().count(), 24);
    assert_eq!(stdout(&["pl", "minimal", "--points", "7"]).lines().count(), 8);
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("two.txt");
    fs::write(&file, "n=3;{01,02,12}\nn=3;{01,02,12}\n").unwrap();
    let f = file.to_str().unwrap();
    let wedge = stdout(&["--verify", "pl", "compose", "--in", f, "--op", "wedge"]);
    assert!(wedge.starts_with("n=5;") && wedge.contains("lines=[{0,1,2},{2,3,4}]"), "{wedge}");
}

#[test]
fn chains_lists_pairs() {
    let out = stdout(&["--verify", "chains", "--group", "Q8"]);
    assert!(out.contains("P=i Q=j cycle=4"));
    assert!(stdout(&["chains", "--group", "Z6"]).is_empty());
}

#[test]
fn wheel_seven() {
    let out = stdout(&["--verify", "wheel", "--spokes", "7"]);
    assert!(out.contains("t=29") && out.contains("terms=-1,5,4,9,13,22,6"));
}

#[test]
fn regen_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    stdout(&["--verify", "regen", a.path().to_str().unwrap()]);
    stdout(&["--threads", "1", "regen", b.path().to_str().unwrap()]);
    let manifest = fs::read_to_string(a.path().join("MANIFEST.sha256")).unwrap();
    assert_eq!(manifest.lines().count(), 7);
    for line in manifest.lines() {
        let (_, name) = line.split_once("  ").unwrap();
        assert_eq!(fs::read(a.path().join(name)).unwrap(), fs::read(b.path().join(name)).unwrap(), "{name}");
    }
    let wheels = fs::read_to_string(a.path().join("wheels.txt")).unwrap();
    assert!(wheels.lines().any(|l| l.starts_with("n=7 ") && l.contains(" t=29 ")));
    assert_eq!(wheels.lines().count(), 21);
}
