use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn pivotal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pivotal"))
        .args(args)
        .env_remove("PIVOTAL_MAX_ARITY")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn eval_and2() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "and2.tt", "bool 2\n0001\n");
    let o = pivotal(&["eval", "-f", s(&f), "-x", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
    let o = pivotal(&["eval", "-f", s(&f), "-x", "1,0"]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn classify_parity3() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "parity3.tt", "bool 3\n01101001\n");
    let o = pivotal(&["classify", "-f", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "minimal: {id,neg}");
    assert_eq!(lines.len(), 17);
    let bits: String = lines[1..].iter().map(|l| l.chars().last().unwrap()).collect();
    // every class whose set contains both id and neg
    assert_eq!(bits, "0100000000011100");
}

#[test]
fn cpivot_lovasz_witness() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "lovasz3.pbf", "pbf 3\n0 0 0 1 0 0 1 2\n");
    let o = pivotal(&["cpivot", "-f", s(&f), "--grid", "4", "--at", "1/2,1/2,1/2"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("failing arguments: 2"), "{out}");
    assert!(out.contains("k=2 a=(1/2,1/2,1/2) b=(1/4,1/2,3/4) f(a)=1 f(b)=3/4"), "{out}");

    let o = pivotal(&["cpivot", "-f", s(&f), "--grid", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).lines().any(|l| l.starts_with("k=2 a=")));
}

#[test]
fn expression_and_file_agree() {
    let dir = TempDir::new().unwrap();
    let o = pivotal(&["parse", "min(x1,x2) + min(x2,x3)", "--sort", "rat"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "expr: min(x1, x2) + min(x2, x3)\narity: 3\npbf 3\n0 0 0 1 0 0 1 2\n");
    let o = pivotal(&["cpivot", "min(x1,x2) + min(x2,x3)", "--sort", "rat", "--grid", "4", "--at", "1/2,1/2,1/2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("k=2 a=(1/2,1/2,1/2) b=(1/4,1/2,3/4)"));
    let f = write(dir.path(), "x.tt", "bool 2\n0110\n");
    let o = pivotal(&["equiv", "-f", s(&f), "--other-expr", "x2 ^ x1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = pivotal(&["equiv", "-f", s(&f), "--other-expr", "x1 & x2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn decompositions() {
    let o = pivotal(&["synth-pi", "x1 ^ x2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("decomposable\npvf extensional 2\n"));
    let o = pivotal(&["check-pi", "x1 & x2 | x3", "--pi", "median"]);
    assert_eq!(o.status.code(), Some(0));
    let o = pivotal(&["check-pi", "x1 ^ x2", "--pi", "median"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("fails: median"));
    let o = pivotal(&["check-pi", "min(x1,x2) + x1", "--sort", "rat", "--grid", "4", "--pi", "mle"]);
    assert_eq!(o.status.code(), Some(1));
    let o = pivotal(&["check-pi", "x1 * x2 + x1", "--sort", "rat", "--grid", "4", "--pi", "mle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("holds (grid-verified)"));
}

#[test]
fn binary_lovasz_pivotals_check() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "l2.pbf", "pbf 2\n1 3 -2 5\n");
    let o = pivotal(&["check-pi", "-f", s(&f), "--grid", "4", "--pi", "lovasz"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn pvf_files() {
    let dir = TempDir::new().unwrap();
    let o = pivotal(&["synth-pi", "x1 & !x2 | x3"]);
    let body = stdout(&o).trim_start_matches("decomposable\n").to_string();
    let pi = write(dir.path(), "f.pvf", &body);
    let o = pivotal(&["check-pi", "x1 & !x2 | x3", "--pi", s(&pi)]);
    assert_eq!(o.status.code(), Some(0));
    let builtin = write(dir.path(), "ite.pvf", "pvf builtin ite\n");
    let o = pivotal(&["check-pi", "x1 ^ x2 ^ x3", "--pi", s(&builtin)]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn lattice_inputs() {
    let dir = TempDir::new().unwrap();
    let lat = write(dir.path(), "d.lat", "lat 4\n0 a b 1\nbottom 0 top 1\nleq 0 a\nleq 0 b\nleq a 1\nleq b 1\nleq 0 1\n");
    let o = pivotal(&["lattice-validate", "-f", s(&lat)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("4 elements"));
    let bad = write(dir.path(), "m3.lat", "lat 5\n0 a b c 1\nbottom 0 top 1\nleq 0 a\nleq 0 b\nleq 0 c\nleq a 1\nleq b 1\nleq c 1\nleq 0 1\n");
    let o = pivotal(&["lattice-validate", "-f", s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid:"));

    let sort = format!("lat:{}", s(&lat));
    let o = pivotal(&["check-pi", "x1 & a | x2", "--sort", &sort, "--pi", "median"]);
    assert_eq!(o.status.code(), Some(0));
    let o = pivotal(&["dd", "med(x1, x2, b)", "--sort", &sort, "--rule", "median"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("dd median 2 1,2\n"));

    let lft = write(dir.path(), "f.lft", "lft 1 d.lat\n0 a a 1\n");
    let o = pivotal(&["eval", "-f", s(&lft), "-x", "b"]);
    assert_eq!(stdout(&o), "a\n");
}

#[test]
fn extensions() {
    let dir = TempDir::new().unwrap();
    let f = write(dir.path(), "l.pbf", "pbf 3\n0 0 0 1 0 0 1 2\n");
    let o = pivotal(&["lovasz", "-f", s(&f), "-x", "1/4,1/2,3/4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "lvf 3\n0 0\n1 0\n2 0\n3 1\n4 0\n5 0\n6 1\n7 0\nvalue: 3/4\n");
    let o = pivotal(&["mobius", "-f", s(&f)]);
    assert_eq!(stdout(&o), "lvf 3\n0 0\n1 0\n2 0\n3 1\n4 0\n5 0\n6 1\n7 0\n");
    let o = pivotal(&["mle", "x1 & x2", "-x", "1/2,1/2"]);
    let out = stdout(&o);
    assert!(out.contains("pivot identity: holds"));
    assert!(out.contains("monotone identity: holds"));
    assert!(out.ends_with("value: 1/4\n"));
    let o = pivotal(&["mle", "x1 ^ x2"]);
    assert!(stdout(&o).contains("monotone identity: fails"));
}

#[test]
fn tables_and_sections() {
    let o = pivotal(&["cofactor", "x1 & x2 | x3", "-k", "3", "-a", "0"]);
    assert_eq!(stdout(&o), "bool 2\n0001\n");
    let o = pivotal(&["section", "x1 & x2 | x3", "--args", "1", "-x", "0,1,0"]);
    assert_eq!(stdout(&o), "bool 1\n01\n");
    let o = pivotal(&["essential", "x1 & x3 | x1", "--arity", "3"]);
    assert_eq!(stdout(&o), "essential: x1\ncount: 1\n");
    let o = pivotal(&["dd", "x1 ^ x2 ^ x3"]);
    let out = stdout(&o);
    assert!(out.starts_with("dd shannon 3 1,2,3\n"));
    assert_eq!(out.lines().count(), 8);
}

#[test]
fn umc_algebra() {
    let o = pivotal(&["umc", "meet", "nondecreasing", "nonincreasing"]);
    assert_eq!(stdout(&o), "{bot,top} class 7 const\n");
    let o = pivotal(&["umc", "complement", "{id,neg}"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{bot,top} class 7 const\n");
}

#[test]
fn errors_exit_with_two() {
    let o = pivotal(&["eval", "x1 & ", "-x", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("column 6") && err.contains("expected"), "{err}");
    let o = pivotal(&["eval", "x1 + x2", "-x", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_pivotal"))
        .args(["parse", "x1 & x13"])
        .env("PIVOTAL_MAX_ARITY", "8")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("PIVOTAL_MAX_ARITY"));
}

#[test]
fn json_and_stability() {
    let args = ["--json", "classify", "x1 & x2 | x3"];
    let a = pivotal(&args);
    let b = pivotal(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["status"], 0);
    assert_eq!(v["classes"].as_array().unwrap().len(), 16);
}
