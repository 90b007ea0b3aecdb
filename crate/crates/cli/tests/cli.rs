use std::process::{Command, Output};

use serde_json::Value;

fn skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim_end().to_string()
}

fn code(args: &[&str]) -> i32 {
    skein(args).status.code().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = skein(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn trace_of_loop_word() {
    let out = skein(&["trace", "--n", "2", "t^2 t1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "q*s[1]*s[2] + (q - 1)*z*s[3]");
}

#[test]
fn strand_count_is_inferred() {
    assert_eq!(
        stdout(&skein(&["trace", "t^2 t1"])),
        stdout(&skein(&["trace", "--n", "2", "t^2 t1"]))
    );
    assert_eq!(stdout(&skein(&["trace", "t g1 t g1"])), "q*s[1]*s[1] + (q - 1)*z*s[2]");
}

#[test]
fn normal_form_in_both_bases() {
    assert_eq!(
        stdout(&skein(&["nf", "t g1 t g1", "--basis", "prime"])),
        "q*t·u1 + (q - 1)*t·u1·g1"
    );
    let v = json(&["nf", "g1^2", "--format", "json"]);
    assert_eq!(v["strands"], 2);
    assert_eq!(v["terms"]["g1"], "q - 1");
    assert_eq!(v["terms"]["1"], "q");
}

#[test]
fn invariant_of_a_stabilised_word() {
    assert_eq!(stdout(&skein(&["x", "t g1"])), "z^-1 * (z*s[1])");
}

#[test]
fn band_move_words() {
    assert_eq!(
        stdout(&skein(&["bbm", "t^2", "--strand", "1", "--sign", "-", "--p", "2"])),
        "t^2 g1 t g1^2 t"
    );
    assert_eq!(code(&["bbm", "t^2", "--n", "1", "--strand", "3"]), 2);
    assert_eq!(code(&["bbm", "t^2", "--strand", "0"]), 2);
}

#[test]
fn order_and_enumeration() {
    assert_eq!(stdout(&skein(&["order", "t^2 t1", "t t1^2"])), "t^2 t1 < t t1^2");
    assert_eq!(
        stdout(&skein(&["enum", "--level", "3", "--positive"])),
        "t^3\nt t1^2\nt t1 t2"
    );
    assert_eq!(
        stdout(&skein(&[
            "enum",
            "--level",
            "3",
            "--positive",
            "--convention",
            "decreasing"
        ])),
        "t^3\nt^2 t1\nt t1 t2"
    );
    let v = json(&[
        "enum",
        "--level",
        "3",
        "--positive",
        "--set",
        "lambda-aug",
        "--format",
        "json",
    ]);
    assert_eq!(v["monomials"].as_array().unwrap().len(), 4);
}

#[test]
fn conversion_to_prime_loops() {
    assert_eq!(
        stdout(&skein(&["convert", "t^2 t1"])),
        "tr(t^2 t1) = (q*z - z)*tr(t^3) + (q)*tr(t u1^2)"
    );
    assert_eq!(code(&["convert", "t u1"]), 2);
}

#[test]
fn decomposition_exit_codes() {
    let out = skein(&["decompose", "t t1^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "tr(t t1^2) = (q - 1)*q*z*tr(t^3) + (q^2 - q + 1)*tr(t^2 t1)"
    );
    let out = skein(&["decompose", "t t1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(3));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["all_lower"], false);
    assert_eq!(code(&["decompose", "t^3"]), 2);
}

#[test]
fn system_sizes() {
    let v = json(&["system", "--level", "3", "--positive", "--format", "json"]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 6);
    let v = json(&[
        "system",
        "--level",
        "3",
        "--positive",
        "--strand",
        "all",
        "--format",
        "json",
    ]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 12);
    let v = json(&[
        "system",
        "--level",
        "3",
        "--positive",
        "--signs",
        "+",
        "--format",
        "json",
    ]);
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn theorem_exit_policy() {
    let v = json(&["verify-theorem", "--level", "2", "--positive", "--format", "json"]);
    assert_eq!(v["main_ok"], true);
    assert_eq!(v["strict_ok"], false);
    assert_eq!(
        code(&["verify-theorem", "--level", "2", "--positive", "--require-strict"]),
        3
    );
}

#[test]
fn identities() {
    assert_eq!(code(&["check-identity", "eq5", "--n", "1", "--k", "3"]), 0);
    assert_eq!(code(&["check-identity", "eq5", "--n", "2", "--k", "-2"]), 0);
    assert_eq!(code(&["check-identity", "lemma2i", "--n", "1", "--k", "2"]), 0);
    assert_eq!(code(&["check-identity", "lemma2ii", "--n", "1", "--k", "-2"]), 0);
    assert_eq!(
        code(&["check-identity", "lemma2ii-printed", "--n", "1", "--k", "-2"]),
        3
    );
    assert_eq!(code(&["check-identity", "lemma2i", "--n", "1", "--k", "-2"]), 2);
    assert_eq!(code(&["check-identity", "nonsense", "--n", "1", "--k", "1"]), 1);
}

#[test]
fn error_codes() {
    assert_eq!(code(&["bogus"]), 1);
    assert_eq!(code(&["trace", "t ^^"]), 1);
    assert_eq!(code(&["trace", "t h1"]), 1);
    assert_eq!(code(&["trace", "--n", "2", "t g5"]), 2);
    assert_eq!(code(&["system", "--level", "2", "--exp-bound", "0"]), 2);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["--version"]), 0);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "verify-theorem",
        "--level",
        "3",
        "--positive",
        "--jobs",
        "4",
        "--format",
        "json",
    ];
    let a = skein(&args);
    let b = skein(&[&args[..4], &["--jobs", "1", "--format", "json"]].concat());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let args = ["system", "--level", "2", "--strand", "all", "--format", "json"];
    assert_eq!(skein(&args).stdout, skein(&args).stdout);
}
