//! End-to-end runs of the `cnqkz` binary: exit codes, output shape,
//! determinism and the golden rank-one expansion.

use std::process::{Command, Output};

use serde_json::Value;

fn cnqkz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cnqkz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    cnqkz(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    let out = cnqkz(args);
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

#[test]
fn golden_rank_one_expansion() {
    let out = cnqkz(&["macdonald", "--n", "1", "--lambda", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let want = include_str!("golden/macdonald_n1_l2.txt");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), want);
}

#[test]
fn degree_one_has_four_unit_monomials() {
    let v = json(&["macdonald", "--n", "2", "--lambda", "1", "--format", "json"]);
    let terms = v["monomial_expansion"].as_array().unwrap();
    assert_eq!(terms.len(), 4);
    assert!(terms.iter().all(|t| t["coefficient"] == "1"));
    assert_eq!(v["schema"], "1");
}

#[test]
fn macdonald_exit_codes() {
    assert_eq!(code(&["macdonald", "--n", "2", "--lambda", "2"]), 0);
    assert_eq!(code(&["macdonald", "--n", "0", "--lambda", "1"]), 2);
    assert_eq!(code(&["macdonald", "--n", "1", "--lambda", "0"]), 2);
    assert_eq!(code(&["macdonald", "--n", "1"]), 2);
    assert_eq!(code(&["macdonald", "--n", "9", "--lambda", "9"]), 2);
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&["verify", "ybe", "--n", "2"]), 0);
    assert_eq!(code(&["verify", "ybe", "--n", "2", "--self-test"]), 1);
    assert_eq!(code(&["verify", "eigen", "--n", "2", "--lambda", "3"]), 0);
    assert_eq!(
        code(&[
            "verify",
            "eigen",
            "--n",
            "2",
            "--lambda",
            "3",
            "--self-test"
        ]),
        1
    );
    assert_eq!(code(&["verify", "nonsense"]), 2);
    assert_eq!(code(&["verify", "hecke", "--n", "0"]), 2);
    assert_eq!(code(&["verify", "ybe", "--n", "12"]), 2);
    assert_eq!(code(&["verify", "qkz-numeric", "--q", "1.5"]), 2);
}

#[test]
fn qkz_numeric_example() {
    let args = [
        "verify",
        "qkz-numeric",
        "--n",
        "2",
        "--lambda",
        "2",
        "--q",
        "0.25",
        "--t",
        "0.6",
        "--tol",
        "1e-8",
        "--seed",
        "7",
    ];
    let out = cnqkz(&args);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks
        .iter()
        .all(|c| c["residual"].as_f64().unwrap() < 1e-8));
}

#[test]
fn s0_relations_at_explicit_point() {
    let args = [
        "verify", "lemma43", "--n", "2", "--lambda", "2", "--q", "0.25", "--t", "0.6", "--y",
        "0.9", "--y", "1.3",
    ];
    assert_eq!(code(&args), 0);
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "verify", "cor51", "--n", "2", "--lambda", "1", "--seed", "11",
    ];
    let a = cnqkz(&args);
    let b = cnqkz(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let m = ["macdonald", "--n", "3", "--lambda", "2", "--format", "json"];
    assert_eq!(cnqkz(&m).stdout, cnqkz(&m).stdout);
}

#[test]
fn integral_examples() {
    let v = json(&[
        "integral", "--n", "1", "--lambda", "1", "--q", "0.3", "--t", "0.7", "--y", "0.9", "--psi",
        "one",
    ]);
    assert_eq!(v["converged"], true);
    let re = v["value"][0].as_f64().unwrap();
    let im = v["value"][1].as_f64().unwrap();
    assert!(re.is_finite() && im.is_finite());
    assert!(v["terms_used"].as_u64().unwrap() > 0);

    let base = [
        "integral", "--n", "1", "--lambda", "1", "--t", "0.7", "--y", "0.9",
    ];
    assert_eq!(code(&[&base[..], &["--q", "1.1"]].concat()), 2);
    assert_eq!(code(&[&base[..], &["--q", "0"]].concat()), 2);
    assert_eq!(
        code(&[&base[..], &["--q", "0.3", "--psi", "phi_7"]].concat()),
        2
    );
    // y = 1 puts the y and 1/y ladders on top of each other
    let clash = [
        "integral", "--n", "1", "--lambda", "1", "--q", "0.3", "--t", "0.7", "--y", "1",
    ];
    assert_eq!(code(&clash), 2);
}

#[test]
fn integral_text_format() {
    let out = cnqkz(&[
        "integral", "--n", "2", "--lambda", "1", "--q", "0.3", "--t", "0.7", "--y", "0.9+0.1i",
        "--y", "1.2", "--psi", "phi_3", "--format", "text",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(!out.stdout.is_empty());
}

#[test]
fn help_exits_zero() {
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["verify", "--help"]), 0);
    assert_eq!(code(&[]), 2);
}
