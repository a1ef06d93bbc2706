use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aztec20v")).args(args).env_remove("AZTEC20V_THREADS").output().unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (v, out.status.code().unwrap())
}

fn values(v: &Value) -> Vec<String> {
    v["records"].as_array().unwrap().iter().map(|r| r["lhs"].as_str().unwrap().to_string()).collect()
}

#[test]
fn table_quadrangle() {
    let (v, code) = json(&["table", "--model", "20v", "--n-max", "5"]);
    assert_eq!(code, 0);
    assert_eq!(values(&v), ["1", "4", "60", "3328", "678912"]);
    assert_eq!(v["summary"]["pass"], "5");
}

#[test]
fn table_square_pentagon() {
    let (v, code) = json(&["table", "--model", "20v", "--pentagon", "0", "--n-max", "4"]);
    assert_eq!(code, 0);
    assert_eq!(values(&v), ["1", "3", "29", "901"]);
    let (v, _) = json(&["table", "--model", "dt", "--n-max", "1"]);
    assert_eq!(values(&v), ["1"]);
}

#[test]
fn refined_lists() {
    let (v, _) = json(&["refined", "--model", "dt", "--n", "4"]);
    assert_eq!(values(&v), ["1780;1100;388;60"]);
    let (v, _) = json(&["refined", "--model", "6v", "--n", "2"]);
    assert_eq!(values(&v), ["1;1/2"]);
    let (v, _) = json(&["refined", "--model", "20v", "--n", "1"]);
    assert_eq!(values(&v), ["1"]);
}

#[test]
fn oracle_counts() {
    let (v, code) = json(&["oracle", "--model", "dt", "--n", "3", "--refined"]);
    assert_eq!(code, 0);
    let recs = v["records"].as_array().unwrap();
    let get = |q: &str| recs.iter().find(|r| r["params"]["quantity"] == q).unwrap()["lhs"].clone();
    assert_eq!(get("total"), "60");
    assert_eq!(get("refined"), "37;19;4");
    let (v, _) = json(&["oracle", "--model", "20v", "--n", "2"]);
    assert_eq!(values(&v), ["4"]);
    let (v, _) = json(&["oracle", "--model", "dt", "--n", "2", "--gamma"]);
    let recs = v["records"].as_array().unwrap();
    assert!(recs.iter().any(|r| r["params"]["quantity"] == "total-at-gamma-1" && r["lhs"] == "4"));
}

#[test]
fn oracle_bound_is_a_config_error() {
    let out = run(&["oracle", "--model", "20v", "--n", "40"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("n ≤ 8"));
}

#[test]
fn verify_suites() {
    let (v, code) = json(&["verify", "--suite", "all", "--n-max", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["fail"], "0");
    let (v, code) = json(&["verify", "--suite", "conjecture", "--n-max", "30"]);
    assert_eq!(code, 0);
    let recs = v["records"].as_array().unwrap();
    assert_eq!(recs.len(), 30);
    assert!(recs.iter().all(|r| r["kind"] == "conjecture-consistency"));
    let (_, code) = json(&["verify", "--suite", "weights"]);
    assert_eq!(code, 0);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--model", "20v"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--model", "20v", "--n-min", "3", "--n-max", "2"]).status.code(), Some(2));
    assert_eq!(run(&["refined", "--model", "dt", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["oracle", "--model", "20v", "--n", "2", "--gamma"]).status.code(), Some(2));
    assert_eq!(run(&["--threads", "0", "verify", "--suite", "weights"]).status.code(), Some(2));
}

#[test]
fn csv_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = run(&["table", "--model", "dt", "--n-max", "3", "--format", "csv", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, "model,n,k,value,status\ndt,1,0,1,pass\ndt,2,1,4,pass\ndt,3,2,60,pass\n");
    let svg = dir.path().join("f.svg");
    let out = run(&["render", "--n", "3", "-o", svg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(std::fs::read_to_string(&svg).unwrap().contains("<polyline"));
}

#[test]
fn boundary_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.json");
    std::fs::write(&path, default_boundary(3, 2)).unwrap();
    let (v, code) = json(&["oracle", "--model", "20v", "--n", "3", "--boundary", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(values(&v), ["60"]);
    let tampered = default_boundary(3, 2).replacen("\"occupied\": true", "\"occupied\": false", 1);
    std::fs::write(&path, tampered).unwrap();
    assert_eq!(run(&["oracle", "--model", "20v", "--n", "3", "--boundary", path.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&path, "{\"n\":3}").unwrap();
    assert_eq!(run(&["oracle", "--model", "20v", "--n", "3", "--boundary", path.to_str().unwrap()]).status.code(), Some(2));
}

fn default_boundary(n: usize, k: usize) -> String {
    let out = run(&["boundary", "--n", &n.to_string(), "--k", &k.to_string()]);
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}
