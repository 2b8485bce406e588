use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cshuffle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is one JSON document");
    (out.status.code().unwrap(), v)
}

#[test]
fn eval_cyclic_descent_set() {
    let (code, v) = json(&["eval", "--stat", "cDesL", "--perm", "179624"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "ok");
    assert_eq!(v["payload"]["value"], "{3,4,6}");
    assert_eq!(v["payload"]["value_json"], serde_json::json!([3, 4, 6]));
}

#[test]
fn cshuffle_has_six_classes() {
    let (code, v) = json(&["cshuffle", "--a", "63", "--b", "24"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["count"], 6);
}

#[test]
fn pk_val_counterexample_confirms() {
    let (code, v) = json(&["counterexample", "--name", "pk_val"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["confirmed"], true);
    let target = &v["payload"]["target"];
    let count_of = |pair: [i64; 2]| {
        target
            .as_array()
            .unwrap()
            .iter()
            .find(|e| e["value"] == serde_json::json!(pair))
            .map(|e| e["count"].as_u64().unwrap())
    };
    assert_eq!(count_of([0, 0]), Some(1));
    assert_eq!(count_of([1, 1]), Some(3));
}

#[test]
fn dims_cpk_cdes() {
    let (code, v) = json(&["dims", "--stat", "cpk,cdes", "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["dimension"], 9);
}

#[test]
fn checks_against_claims() {
    let (code, v) = json(&["check-sc", "--stat", "des", "--max-n", "5"]);
    assert_eq!((code, v["payload"]["matches_claim"].clone()), (0, Value::Bool(true)));
    let (code, v) = json(&["check-csc", "--stat", "ind:Ddes", "--max-n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(v["payload"]["report"]["verdict"], "incompatible");
    let (code, _) = json(&["check-equiv", "--a", "ind:maj", "--b", "ind:cmaj", "--max-n", "6"]);
    assert_eq!(code, 0);
}

#[test]
fn mismatch_exits_one() {
    // The cmaj witness needs size 10, so a bound of 6 cannot reproduce it.
    let (code, v) = json(&["check-csc", "--stat", "ind:cmaj", "--max-n", "6"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "fail");
    let (code, _) = json(&["check-csc", "--stat", "ind:cmaj", "--shape", "1,9"]);
    assert_eq!(code, 0);
}

#[test]
fn domain_errors_carry_a_code() {
    let (code, v) = json(&["eval", "--stat", "nope", "--perm", "12"]);
    assert_eq!(code, 2);
    assert_eq!(v["verdict"], "error");
    assert_eq!(v["payload"]["code"], "unknown_stat");
    let (code, v) = json(&["shuffle", "--a", "12", "--b", "23"]);
    assert_eq!(code, 2);
    assert_eq!(v["payload"]["code"], "not_disjoint");
}

#[test]
fn usage_errors_name_the_flag() {
    let out = run(&["eval", "--stat", "des"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--perm"));
}

#[test]
fn replay_is_byte_identical() {
    let args = [
        "verify-theorem", "--name", "majdes-gf", "--max-size", "4", "--samples", "3", "--seed", "7", "--json",
    ];
    let payload = |o: Output| {
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        serde_json::to_string(&v["payload"]).unwrap()
    };
    let (a, b) = (payload(run(&args)), payload(run(&args)));
    assert_eq!(a, b);
    assert!(a.contains("\"seed\":7"));
}

#[test]
fn human_table_by_default() {
    let out = run(&["shuffle", "--a", "71", "--b", "25"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("command"));
    assert!(text.contains("7125 7215 7251 2715 2751 2571"));
}
