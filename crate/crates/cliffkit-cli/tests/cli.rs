//! End-to-end tests of the `cliffkit` binary: exit codes, determinism and
//! JSON Schema conformance of every command's output.

use std::path::PathBuf;
use std::process::{Command, Output};

use clap::Parser;
use proptest::prelude::*;
use serde_json::Value;

use cliffkit_cli::{run, Cli};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cliffkit"))
}

fn exec(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn cliffkit")
}

fn exec_env(args: &[&str], key: &str, val: &str) -> Output {
    bin().args(args).env(key, val).output().expect("spawn cliffkit")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}):\n{}\nstderr:\n{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    })
}

fn schema(command: &str) -> Value {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "schemas", &format!("{command}.schema.json")].iter().collect();
    serde_json::from_str(&std::fs::read_to_string(&path).expect("schema file")).expect("schema is JSON")
}

fn assert_valid(doc: &Value) {
    let command = doc["command"].as_str().expect("command field");
    let validator = jsonschema::validator_for(&schema(command)).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{command} output violates its schema:\n{}\n{doc:#}", errors.join("\n"));
    assert_eq!(doc["schema"], "cliffkit/1");
}

fn ok_json(args: &[&str]) -> Value {
    let out = exec(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: stderr {}", String::from_utf8_lossy(&out.stderr));
    let doc = json(&out);
    assert_valid(&doc);
    doc
}

#[test]
fn every_command_matches_its_schema() {
    let runs: &[&[&str]] = &[
        &["classify", "--p", "3", "--q", "1"],
        &["classify", "--p", "2", "--q", "3"],
        &["classify", "--n", "4"],
        &["classify", "--p", "0", "--q", "0"],
        &["table", "--max", "3"],
        &["veegroup", "--p", "2", "--q", "0"],
        &["veegroup", "--p", "3", "--q", "2"],
        &["rep", "--p", "1", "--q", "3"],
        &["rep", "--p", "0", "--q", "2"],
        &["rep", "--p", "1", "--q", "3", "--idempotent", "e234"],
        &["rep", "--n", "4", "--basis", "dirac"],
        &["rep", "--p", "1", "--q", "3", "--basis", "gamma"],
        &["rep", "--n", "3"],
        &["quotient", "--n", "3", "--p", "3"],
        &["quotient", "--p", "3", "--q", "2"],
        &["lorentz", "--l0", "1/2", "--l1", "3/2"],
        &["lorentz", "--max", "6"],
        &["lorentz", "--audit", "4"],
        &["lorentz", "--p", "3", "--q", "1"],
        &["field", "dh", "--coeffs", "1,2,3,4,5,6,7,8"],
        &["field", "em", "--partials", "1,0,0,0", "--A", "0,1,0,0"],
        &["field", "maxwell", "--derivs", "1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0"],
        &["field", "bivector", "--E", "1,2,3", "--H", "4,5,6"],
        &["audit", "--only", "periodic-table"],
    ];
    for args in runs {
        ok_json(args);
    }
}

#[test]
fn classify_reports_pin_data() {
    let doc = ok_json(&["classify", "--p", "3", "--q", "1"]);
    assert_eq!(doc["matrix_form"], "R(4)");
    assert_eq!(doc["aut_group"], "Q4/Z2");
    assert_eq!(doc["signature"], "(-,-,-)");
    assert_eq!(doc["cover"], "Q4");
    let doc = ok_json(&["classify", "--p", "1", "--q", "3"]);
    assert_eq!(doc["matrix_form"], "H(2)");
}

#[test]
fn dirac_basis_reproduces_printed_matrices() {
    let doc = ok_json(&["rep", "--n", "4", "--basis", "dirac"]);
    let e: Vec<Vec<String>> = serde_json::from_value(doc["reflections"]["E"].clone()).expect("E matrix");
    assert_eq!(e, [["0", "-1", "0", "0"], ["1", "0", "0", "0"], ["0", "0", "0", "-1"], ["0", "0", "1", "0"]]);
}

#[test]
fn table_text_is_the_periodic_table() {
    let out = exec(&["table", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let last = text.lines().last().unwrap();
    assert_eq!(last.split_whitespace().collect::<Vec<_>>(), ["7", "²R(8)", "R(16)", "C(16)", "H(16)", "²H(16)", "H(32)", "C(64)", "R(128)"]);
}

#[test]
fn output_is_deterministic() {
    for args in [&["rep", "--p", "2", "--q", "2"][..], &["quotient", "--n", "5", "--p", "1"], &["audit", "--only", "field"]] {
        let (a, b) = (exec(args), exec(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(exec(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(exec(&["classify", "--p", "x"]).status.code(), Some(2));
    // invalid input
    assert_eq!(exec(&["field", "dh", "--coeffs", "1,2,3"]).status.code(), Some(2));
    assert_eq!(exec(&["rep", "--p", "1", "--q", "3", "--idempotent", "e1,e1"]).status.code(), Some(2));
    assert_eq!(exec(&["audit", "--only", "no-such-check"]).status.code(), Some(2));
    assert_eq!(exec_env(&["rep", "--p", "2", "--q", "2"], "CLIFFKIT_MAX_DIM", "3").status.code(), Some(2));
    // consistency failures: a class-table conflict and a deliberately corrupted audit
    let out = exec(&["quotient", "--p", "2", "--q", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(!out.stderr.is_empty());
    let out = exec(&["audit", "--only", "blade_sign", "--corrupt-sign"]);
    assert_eq!(out.status.code(), Some(3));
    let doc = json(&out);
    assert_valid(&doc);
    assert_eq!(doc["passed"], false);
}

#[test]
fn quotient_class_c_for_c3() {
    let doc = ok_json(&["quotient", "--n", "3", "--p", "3"]);
    assert_eq!(doc["class"], "c");
}

#[test]
fn full_audit_passes() {
    let doc = ok_json(&["audit"]);
    assert_eq!(doc["passed"], true);
}

fn run_args(args: &[String]) -> (i32, String) {
    let cli = Cli::try_parse_from(std::iter::once("cliffkit".to_string()).chain(args.iter().cloned())).expect("valid arguments");
    let out = run(&cli);
    (out.code, out.stdout)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn classify_any_small_signature(p in 0usize..=6, q in 0usize..=6) {
        let args = vec!["classify".into(), "--p".into(), p.to_string(), "--q".into(), q.to_string()];
        let (code, stdout) = run_args(&args);
        prop_assert_eq!(code, 0);
        let doc: Value = serde_json::from_str(&stdout).unwrap();
        assert_valid(&doc);
        prop_assert_eq!(doc["p"].as_u64(), Some(p as u64));
        let (_, again) = run_args(&args);
        prop_assert_eq!(stdout, again);
    }

    #[test]
    fn dh_accepts_any_rational_coefficients(c in prop::collection::vec((-9i64..=9, 1i64..=5), 8)) {
        let coeffs = c.iter().map(|(n, d)| format!("{n}/{d}")).collect::<Vec<_>>().join(",");
        let (code, stdout) = run_args(&["field".into(), "dh".into(), "--coeffs".into(), coeffs]);
        prop_assert_eq!(code, 0);
        assert_valid(&serde_json::from_str(&stdout).unwrap());
    }
}
