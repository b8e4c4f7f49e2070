use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_multideg"))
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p
}

fn run(args: &[&str], input: &Path) -> Output {
    let mut c = bin();
    c.arg(args[0]).arg(input).args(&args[1..]);
    c.output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

const EX1: &str = r#"{"A": [[1,1,1],[0,1,2]], "beta": "generic"}"#;
const EX2: &str = r#"{"A": [[1,1,1,1],[0,1,2,3]]}"#;
const EX6: &str = r#"{"A": [[-2,-1,0,1],[1,1,2,2]]}"#;

#[test]
fn hypergeom_ex1() {
    let dir = TempDir::new().unwrap();
    let out = run(&["hypergeom"], &write(&dir, "ex1.json", EX1));
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("2*T1^3 + 2*T1^2*T2"));
    let v = json_of(&out);
    assert_eq!(v["nice"], true);
    assert_eq!(v["formula_match"], true);
    assert_eq!(v["volume"], 2);
}

#[test]
fn check_ex6() {
    let dir = TempDir::new().unwrap();
    let v = json_of(&run(&["check"], &write(&dir, "ex6.json", EX6)));
    assert_eq!(v["homogeneous"], false);
    assert_eq!(v["pointed"], true);
    assert_eq!(v["cohen_macaulay"], false);
    assert_eq!(v["volume"], 6);
}

#[test]
fn formula_ex2() {
    let dir = TempDir::new().unwrap();
    let v = json_of(&run(&["formula"], &write(&dir, "ex2.json", EX2)));
    assert_eq!(v["closed_form"], "3*T1^4 + 6*T1^3*T2 + 3*T1^2*T2^2");
}

#[test]
fn toric_ex2() {
    let dir = TempDir::new().unwrap();
    let v = json_of(&run(&["toric"], &write(&dir, "ex2.json", EX2)));
    assert_eq!(v["toric_ideal"].as_array().unwrap().len(), 3);
}

#[test]
fn beta_flag_overrides_input() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "ex6.json", EX6);
    let v = json_of(&run(&["hypergeom", "--beta", "-1,2"], &p));
    assert_eq!(v["generic"], false);
    assert_eq!(v["multidegree"], "7*T1^4 + 16*T1^3*T2 + 12*T1^2*T2^2 + 4*T1*T2^3 + T2^4");
}

#[test]
fn scan_beta_from_flag_and_file() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "ex6.json", EX6);
    let v = json_of(&run(&["scan-beta", "--beta", "-1,2;3/2,-7"], &p));
    let scan = v["scan"].as_array().unwrap();
    assert_eq!(scan.len(), 2);
    assert_eq!(scan[0]["multidegree"], "7*T1^4 + 16*T1^3*T2 + 12*T1^2*T2^2 + 4*T1*T2^3 + T2^4");
    assert_eq!(scan[1]["multidegree"], "6*T1^4 + 12*T1^3*T2 + 6*T1^2*T2^2");

    let q = write(&dir, "ex1.json", r#"{"A": [[1,1,1],[0,1,2]], "betas": [["0","0"], ["1","2"]]}"#);
    let v = json_of(&run(&["scan-beta"], &q));
    for e in v["scan"].as_array().unwrap() {
        assert_eq!(e["multidegree"], "2*T1^3 + 2*T1^2*T2");
    }
}

#[test]
fn multidegree_and_grl() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "op.txt", "# irregular at t = 0\nring 0 1\ngen t1^2*dt1 + 1\n");
    let v = json_of(&run(&["multidegree"], &p));
    assert_eq!(v["multidegree"], "T1");
    let v = json_of(&run(&["grl", "--slopes", "1/2,1/1,2/1,1/3"], &p));
    let groups = v["groups"].as_array().unwrap();
    assert_eq!(groups.len(), 3);
    assert_eq!(groups[0]["slopes"], serde_json::json!([[1, 2], [1, 3]]));
}

#[test]
fn reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "ex6.json", EX6);
    let a = run(&["hypergeom", "--seed", "7"], &p);
    let b = run(&["hypergeom", "--seed", "7"], &p);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(!String::from_utf8_lossy(&a.stdout).contains("timings"));
    let t = json_of(&run(&["hypergeom", "--seed", "7", "--timings"], &p));
    assert!(t["timings_ms"]["total"].is_number());
}

#[test]
fn out_and_text_format() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "ex2.json", EX2);
    let target = dir.path().join("report.txt");
    let out = run(&["formula", "--format", "text", "--out", target.to_str().unwrap()], &p);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read_to_string(target).unwrap(), "3*T1^4 + 6*T1^3*T2 + 3*T1^2*T2^2\n");
}

#[test]
fn errors_are_json_with_nonzero_exit() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("nope.json");
    let out = run(&["check"], &missing);
    assert!(!out.status.success());
    assert_eq!(json_of(&out)["error"]["stage"], "read");

    let bad = write(&dir, "bad.txt", "ring 0 1\ngen dt1 @@\n");
    let out = run(&["multidegree"], &bad);
    assert!(!out.status.success());
    let e = &json_of(&out)["error"];
    assert_eq!(e["kind"], "syntax");
    assert_eq!(e["stage"], "parse");
    assert_eq!(e["line"], 2);
    assert_eq!(e["col"], 9);

    let m = write(&dir, "m.json", r#"{"A": [[1,1],[1,1]]}"#);
    let out = run(&["hypergeom"], &m);
    assert!(!out.status.success());
    assert_eq!(json_of(&out)["error"]["kind"], "bad_matrix");

    let out = run(&["grl"], &write(&dir, "g.txt", "ring 0 1\ngen dt1\n"));
    assert!(!out.status.success());
    assert_eq!(json_of(&out)["error"]["stage"], "arguments");

    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["kind"], "usage");
}
