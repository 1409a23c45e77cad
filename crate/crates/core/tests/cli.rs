use std::path::Path;
use std::process::{Command, Output};

use intersection_density::density::{DensityReport, StrictEkr};
use num_rational::Ratio;

fn ekr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ekr")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

const S3_TABLE: &str = r#"{
  "classes": [{"size": 1, "rep_order": 1}, {"size": 3, "rep_order": 2}, {"size": 2, "rep_order": 3}],
  "chars": [[[1,0],[1,0],[1,0]], [[1,0],[-1,0],[1,0]], [[2,0],[0,0],[-1,0]]]
}"#;

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn density_json_parses_back() {
    let out = ekr(&["density", "--family", "sym3", "--n", "6"]);
    assert_eq!(code(&out), 0);
    let rep = DensityReport::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(rep.rho, Ratio::new(5, 3));
    assert_eq!(rep.degree, 240);
    assert_eq!(rep.strict_ekr, StrictEkr::False);
}

#[test]
fn density_routes_and_csv() {
    let out = ekr(&["density", "--family", "psl2z3", "--q", "7", "--route", "explicit", "--csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().nth(1).unwrap().ends_with(",4,4,3,false,false"), "{text}");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.json");
    let out = ekr(&["--out", path.to_str().unwrap(), "density", "--family", "agl1", "--q", "9", "--route", "fixer"]);
    assert_eq!(code(&out), 0);
    let rep = DensityReport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(rep.rho, Ratio::from_integer(3));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&ekr(&[])), 2);
    assert_eq!(code(&ekr(&["density"])), 2);
    assert_eq!(code(&ekr(&["density", "--family", "sym3"])), 2);
    assert_eq!(code(&ekr(&["density", "--family", "nope"])), 2);
    assert_eq!(code(&ekr(&["clique"])), 2);
}

#[test]
fn domain_errors_exit_one_with_json() {
    let out = ekr(&["density", "--family", "psl2z3", "--q", "6"]);
    assert_eq!(code(&out), 1);
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "input");

    let out = ekr(&["density", "--family", "file", "--path", "/nonexistent/group.json"]);
    assert_eq!(code(&out), 1);
    let err: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "io");
}

#[test]
fn verify_paper_detects_tampering() {
    assert_eq!(code(&ekr(&["verify-paper"])), 0);
    assert_eq!(code(&ekr(&["verify-paper", "--expect", "sym3(n=5)=5/3"])), 1);
}

#[test]
fn clique_on_paley() {
    let out = ekr(&["clique", "--paley", "25"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["omega"], 5);
}

#[test]
fn charsum_against_counted_a111() {
    let dir = tempfile::tempdir().unwrap();
    let table = write(dir.path(), "s3.json", S3_TABLE);
    let group = write(dir.path(), "g.json", r#"{"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}"#);

    let out = ekr(&["charsum", "--table", &table, "--involution-class", "1"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["report"]["vanishes"], true);

    let out = ekr(&["charsum", "--table", &table, "--involution-class", "1", "--family", "file", "--path", &group]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["a111"]["a111"], 0);

    assert_eq!(code(&ekr(&["charsum", "--table", &table, "--involution-class", "2"])), 1);
}

#[test]
fn a111_and_orbitals() {
    let out = ekr(&["a111", "--family", "erq", "--n", "4"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["a111"], 6);

    let out = ekr(&["orbitals", "--family", "agl1", "--q", "9"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&ekr(&["construct", "--family", "paley", "--q", "9"])), 0);
}
