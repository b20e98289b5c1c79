//! End-to-end tests of the command-line interface: subcommands, output
//! formats and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qregular"))
        .args(args)
        .output()
        .expect("binary must run")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn analyze_text_output() {
    let out = run(&["analyze", "--function", "conj(z1) + (z1 + conj(z2))*j"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("energy:       3"));
    assert!(text.contains("class:        III"));
    assert!(text.contains("±(1,0,2)"));
}

#[test]
fn analyze_json_output() {
    let out = run(&[
        "analyze",
        "--function",
        "z1 + z2 + conj(z1) + (z1 + z2 + conj(z2))*j",
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["energy"], "6");
    assert_eq!(v["trace_a"], "6");
    assert_eq!(v["classification"]["class"], "IV");
    assert_eq!(v["matrix_a"][0][0], "2");
    // exact rationals are strings, never floats
    assert!(v["energy"].is_string());
}

#[test]
fn analyze_is_deterministic() {
    let args = [
        "analyze",
        "--function",
        "z1*conj(z1) - z2*conj(z2) + (conj(z1)*conj(z2))*j",
        "--json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn analyze_with_approx_marks_approximations() {
    let out = run(&["analyze", "--function", "z1 + z2*j", "--json", "--approx"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["approx"]["note"]
        .as_str()
        .unwrap()
        .contains("approximation"));
    assert_eq!(v["approx"]["energy"], 2.0);
}

#[test]
fn analyze_on_other_domains() {
    let out = run(&[
        "analyze",
        "--function",
        "z1*conj(z1)",
        "--domain",
        "ball:2",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("domain:       ball:2"));

    let out = run(&[
        "analyze",
        "--function",
        "z1",
        "--domain",
        "box:0,1x0,1x0,1x0,1",
    ]);
    assert!(out.status.success());
}

#[test]
fn check_subcommand() {
    let out = run(&["check", "--function", "z1 + z2*j", "--direction", "1,0,0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("is holomorphic"));

    let out = run(&["check", "--function", "z1 + z2*j", "--direction", "0,0,1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("is not holomorphic"));
}

#[test]
fn paper_examples_subcommand() {
    let out = run(&["paper-examples"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("PASS positive-example-h"));
    assert!(text.contains("12 of 12 cases passed"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn appendix_subcommand() {
    let out = run(&["appendix", "--q1", "1,0", "--q2", "0,0", "--q3", "0,0"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("sextic invariant, both routes: 0"));

    let out = run(&["appendix", "--q1", "1,0", "--q2", "0,1", "--q3", "1,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("both routes: -4"));
    assert!(text.contains("holomorphic for no structure"));
}

#[test]
fn appendix_accepts_rational_complex_coefficients() {
    let out = run(&["appendix", "--q1", "1/2+3i,-i", "--q2", "2,1/3", "--q3", "0,2/5i"]);
    assert!(out.status.success());
}

#[test]
fn exit_code_two_on_parse_errors() {
    let out = run(&["analyze", "--function", "z1 + $"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("parse error"));

    let out = run(&["check", "--function", "z3", "--direction", "1,0,0"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["appendix", "--q1", "bogus,0", "--q2", "0,0", "--q3", "0,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_one_on_analysis_errors() {
    // zero direction
    let out = run(&["check", "--function", "z1", "--direction", "0,0,0"]);
    assert_eq!(out.status.code(), Some(1));

    // bad domain
    let out = run(&["analyze", "--function", "z1", "--domain", "ball:0"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["analyze", "--function", "z1", "--domain", "torus"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["analyze", "--function", "z1", "--domain", "box:1,0x0,1x0,1x0,1"]);
    assert_eq!(out.status.code(), Some(1));
}
