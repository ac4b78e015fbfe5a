use std::process::Command;

use z2claw::cli::json::GeneratorDocument;
use z2claw::cli::main_with_args;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("z2claw").chain(args.iter().copied());
    let code = main_with_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn ideal_json_has_thirty_generators() {
    let (code, out, _) = run(&["ideal", "--n", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: GeneratorDocument = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.count, 30);
    assert_eq!((doc.property_one.len(), doc.property_two.len()), (24, 6));
}

#[test]
fn verify_three_leaves() {
    let (code, out, _) = run(&["verify-groebner", "--n", "3", "--strict"]);
    assert_eq!(code, 0);
    assert!(out.contains("all pairs coprime or reduced"), "{out}");
}

#[test]
fn failed_verification_exits_one() {
    let (code, out, _) = run(&["verify-groebner", "--n", "5", "--strict"]);
    assert_eq!(code, 1);
    assert!(out.contains("NOT a Groebner basis"), "{out}");
}

#[test]
fn lattice_csv_shape() {
    let (code, out, _) = run(&["lattice", "--n", "4", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(lines[0].starts_with("row,0000,0001"));
    assert_eq!(lines[10], "L10,0,0,0,0,0,0,0,0,1,0,0,-1,-1,0,0,1");
    assert!(lines[1..].iter().all(|l| l.split(',').count() == 17));
}

#[test]
fn cas_scripts() {
    let (code, out, _) = run(&["export", "--n", "3", "--format", "cas-script"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("// claw tree on 3 leaves, 3 generators\n"));
    let (_, out, _) = run(&["export", "--n", "4", "--format", "cas-script", "--source", "lattice"]);
    assert!(out.contains("q_1111), lp;"));
    assert_eq!(out.lines().filter(|l| l.starts_with("  q_")).count(), 10);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["ideal", "--n", "5", "--format", "json"][..],
        &["matrix", "--n", "6", "--format", "csv"][..],
        &["export", "--n", "5", "--format", "cas-script"][..],
    ] {
        assert_eq!(run(args).1, run(args).1);
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["matrix", "--n", "1"]).0, 2);
    assert_eq!(run(&["ideal", "--n", "2"]).0, 2);
    assert_eq!(run(&["ideal", "--n", "9", "--cap", "8"]).0, 2);
    assert_eq!(run(&["matrix", "--n", "3", "--format", "yaml"]).0, 2);
    assert_eq!(run(&["frobnicate", "--n", "3"]).0, 2);
    assert_eq!(run(&["verify-groebner", "--n", "3", "--format", "csv"]).0, 2);
    let (code, _, err) = run(&["ideal", "--n", "3", "--out", "/nonexistent/dir/x.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot write output"));
}

#[test]
fn writes_to_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b4.csv");
    let (code, out, _) = run(&["matrix", "--n", "4", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, run(&["matrix", "--n", "4", "--format", "csv"]).1);
}

#[test]
fn binary_oracle_compare() {
    let out = Command::new(env!("CARGO_BIN_EXE_z2claw"))
        .args(["oracle-compare", "--n", "4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(!out.stdout.is_empty());
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_z2claw"))
        .args(["ideal", "--n", "6"])
        .env("Z2CLAW_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
