//! End-to-end tests of the `qskein` binary: exit codes, JSON schema and
//! deterministic output.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qskein"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn jones_json_and_round_trip() {
    let out = run(&["jones", "--algebra", "sl2", "--color", "1", "--link", "2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["algebra"], "sl2");
    assert_eq!(v["n"], 1);
    assert_eq!(v["spec"], serde_json::json!([2]));
    let p = qskein::laurent::LaurentPoly::from_json(&v["polynomial"]).unwrap();
    let expect = qskein::jones_2bridge::colored_jones(
        &qskein::jones_2bridge::TwoBridgeSpec::new(vec![1]).unwrap(),
        1,
        qskein::jones_2bridge::Algebra::Sl2,
    )
    .unwrap()
    .polynomial;
    assert_eq!(p, expect);
    // Byte-identical on repeat runs.
    let again = run(&["jones", "--algebra", "sl2", "--color", "1", "--link", "2"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn jones_color_zero_is_one() {
    let out = run(&["jones", "--color", "0", "--link", "2,-2"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let p = qskein::laurent::LaurentPoly::from_json(&v["polynomial"]).unwrap();
    assert!(p.is_one());
}

#[test]
fn expand_kauffman_instance() {
    let out = run(&["expand", "--algebra", "sl2", "--n", "1", "--m", "1", "--kind", "half"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    // k=1 coefficient q^{1/4} = t^3, k=0 coefficient q^{-1/4} = t^{-3}.
    assert_eq!(v["coefficients"]["1"]["terms"], serde_json::json!([[3, "1"]]));
    assert_eq!(v["coefficients"]["0"]["terms"], serde_json::json!([[-3, "1"]]));
}

#[test]
fn bubble_loop_coefficient() {
    let out = run(&["bubble", "--algebra", "sl2", "--n", "1", "--m", "1", "--k", "1", "--l", "1"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    // Collapsing the full bubble at n=m=k=l=1 gives the loop value -[2].
    assert_eq!(
        v["coefficients"]["1"]["terms"],
        serde_json::json!([[-6, "-1"], [6, "-1"]])
    );
}

#[test]
fn exit_codes() {
    // Usage errors: bad link, odd entries, sl3 half twists, out-of-range bands.
    assert_eq!(run(&["jones", "--color", "1", "--link", "x"]).status.code(), Some(2));
    assert_eq!(run(&["jones", "--color", "1", "--link", "3"]).status.code(), Some(2));
    assert_eq!(
        run(&["expand", "--algebra", "sl3", "--n", "1", "--kind", "half"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["bubble", "--n", "1", "--m", "1", "--k", "2", "--l", "0"]).status.code(),
        Some(2)
    );
    // Unknown subcommand / missing flags are clap usage errors.
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["jones"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_reports_pass() {
    let out = run(&["verify", "--suite", "qident", "--max-n", "6"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["suite"], "qident");
    assert_eq!(v["failed"], 0);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_is_deterministic_per_seed() {
    let a = run(&["verify", "--suite", "twist", "--seed", "5"]);
    let b = run(&["verify", "--suite", "twist", "--seed", "5"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
