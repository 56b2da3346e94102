use std::process::{Command, Output};

use serde_json::Value;

fn chev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chev")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn gen_prints_the_b2_torus_diagonal() {
    let o = chev(&["gen", "--system", "b2", "--ring", "fp:5", "--elem", "h:a1:-1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let m = json(&o);
    let diag: Vec<&str> = (0..10).map(|i| m[i][i].as_str().unwrap()).collect();
    assert_eq!(diag, ["4", "4", "4", "4", "1", "1", "1", "1", "1", "1"]);
    let off = (0..10).flat_map(|i| (0..10).map(move |j| (i, j))).filter(|&(i, j)| i != j);
    assert!(off.clone().all(|(i, j)| m[i][j] == "0"));
}

#[test]
fn g2_without_one_third_is_refused() {
    let o = chev(&["relations", "--system", "g2", "--ring", "zmod:3^2"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("1/3"), "{err}");
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["bogus"][..],
        &["roots", "--system", "a3"],
        &["gen", "--system", "b2", "--ring", "zmod:6", "--elem", "x:a1:1"],
        &["gen", "--system", "b2", "--ring", "fp:5", "--elem", "x:a9:1"],
        &["replay", "--step", "nope"],
        &["autocheck", "--spec", "{\"composition\": 3}"],
    ] {
        assert_eq!(code(&chev(args)), 2, "{args:?}");
    }
}

#[test]
fn relations_pass_over_z25() {
    let o = chev(&["relations", "--system", "b2", "--ring", "zmod:5^2", "--samples", "20", "--json"]);
    assert_eq!(code(&o), 0);
    let rep = json(&o);
    let rels: Vec<&str> = rep["relations"].as_array().unwrap().iter().map(|r| r["relation"].as_str().unwrap()).collect();
    assert_eq!(rels, ["R1", "R2", "R3", "R4", "R5", "R6"]);
}

#[test]
fn output_is_deterministic() {
    let args = ["relations", "--system", "g2", "--ring", "dual:5", "--samples", "5", "--seed", "9", "--json"];
    let a = chev(&args);
    assert_eq!(a.stdout, chev(&args).stdout);
    let seq = chev(&[&args[..], &["--sequential"]].concat());
    assert_eq!(a.stdout, seq.stdout);
    let r = ["replay", "--step", "all", "--json"];
    assert_eq!(chev(&r).stdout, chev(&r).stdout);
}

#[test]
fn split_reports_six_four() {
    let o = chev(&["split", "--ring", "zmod:5^2", "--system", "b2", "--elem", "h:a1:-1", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!((v["rank0"].as_u64(), v["rank1"].as_u64()), (Some(6), Some(4)));
    // Not an involution.
    assert_eq!(code(&chev(&["split", "--ring", "fp:7", "--system", "b2", "--elem", "x:a1:1"])), 2);
}

#[test]
fn roots_and_constants_dump_json() {
    let o = chev(&["roots", "--system", "g2", "--json"]);
    let roots = json(&o)["roots"].as_array().unwrap().clone();
    assert_eq!(roots.len(), 12);
    assert_eq!(roots.iter().filter(|r| r["long"] == true).count(), 6);
    let c = json(&chev(&["constants", "--system", "b2", "--json"]));
    let ns: Vec<i64> = c["n"].as_array().unwrap().iter().map(|e| e["n"].as_i64().unwrap()).collect();
    assert!(ns.iter().all(|n| [1, 2].contains(&n.abs())));
    assert_eq!(ns.iter().filter(|n| n.abs() == 2).count(), 8);
}

#[test]
fn autocheck_exit_codes() {
    let good = r#"{"composition":[{"ring":"frobenius"},{"inner":"w:a1:1"}]}"#;
    assert_eq!(code(&chev(&["autocheck", "--spec", good, "--samples", "3"])), 0);
    let bad = r#"{"composition":[{"central":{"scalars":[["a1","2"]]}}]}"#;
    let o = chev(&["autocheck", "--spec", bad, "--ring", "fp:7", "--samples", "3"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("R1: FAIL"));
}

#[test]
fn replay_det76_reports_its_value() {
    let o = chev(&["replay", "--step", "det76", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["step"], "det76");
    let pass = v["status"] == "pass";
    assert_eq!(code(&o), if pass { 0 } else { 1 });
    assert!(v["details"]["value"].is_string());
    assert!(v["certificate"].is_object());
    let golden = chev(&["replay", "--step", "golden"]);
    assert_eq!(code(&golden), 0);
    assert!(String::from_utf8_lossy(&golden.stdout).starts_with("golden: PASS"));
}
