//! End-to-end runs of the binary: exit codes, output shape, determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

use collineation::{Field, Tensor3};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_collineation"))
        .args(args)
        .env_remove("COLLINEATION_FIELD")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

fn write_tensor(name: &str, t: &Tensor3) -> PathBuf {
    let path = std::env::temp_dir().join(format!("collineation-cli-{}-{name}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&t.to_json()).unwrap()).unwrap();
    path
}

#[test]
fn classify_unit_tensor() {
    let path = write_tensor("unit", &Tensor3::unit(3, Field::Rational));
    let out = run(&["classify", "--input", path.to_str().unwrap(), "--factor", "1", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["label"], "Plane");
}

#[test]
fn jordan_block_is_a_point() {
    let out = run(&["pencil", "classify", "--blocks", "J3(0)", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["label"], "Point");
}

#[test]
fn strata_dims() {
    let out = run(&["pencil", "strata", "--n2", "3", "--n3", "3", "--k", "2", "--s", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["dims"], serde_json::json!([14]));
}

#[test]
fn reproduce_over_a_prime_field() {
    let out = run(&["catalog", "reproduce", "--lambda", "2", "--field", "gf:32003"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["mismatches"], 0);
    assert_eq!(v["pass"], true);
}

#[test]
fn strassen_rank_of_unit() {
    let out = run(&["strassen", "--entry", "unit"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["rank"], 6);
    assert_eq!(v["sigma3"], true);
}

#[test]
fn oracle_on_explicit_forms() {
    let out = run(&["oracle", "--polys", "x0^2,x0*x1,x1^2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["dim"].clone(), v["deg"].clone(), v["span"].clone()), (1.into(), 2.into(), 3.into()));
    assert_eq!(v["label"], "Conic");
}

#[test]
fn exit_codes() {
    // undefined: every 2x2 minor vanishes
    let t = Tensor3::from_int_terms([3, 3, 3], Field::Rational, &[(0, 0, 0, 1), (1, 0, 1, 1)]).unwrap();
    let path = write_tensor("degenerate", &t);
    assert_eq!(run(&["classify", "--input", path.to_str().unwrap()]).status.code(), Some(1));

    assert_eq!(run(&["classify", "--entry", "IX.9"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--entry", "III.1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--entry", "unit", "--field", "gf:12"]).status.code(), Some(2));
    assert_eq!(run(&["pencil", "classify", "--blocks", "Q7", "--k", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));

    let missing = run(&["classify", "--input", "/nonexistent/tensor.json"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(!missing.stderr.is_empty());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["catalog", "reproduce", "--field", "gf:32003", "--seed", "5", "--jobs", "3"][..],
        &["classify", "--entry", "cuboid", "--params", "a=1,p1=0,p2=1"][..],
        &["catalog", "list"][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let one = run(&["catalog", "reproduce", "--field", "gf:32003", "--jobs", "1"]);
    let many = run(&["catalog", "reproduce", "--field", "gf:32003", "--jobs", "4"]);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn fields_agree_on_the_catalog() {
    let labels = |field: &str| {
        let v = json(&run(&["catalog", "reproduce", "--field", field]));
        v["entries"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| (e["name"].clone(), e["params"].clone(), e["factor"].clone(), e["label"].clone()))
            .collect::<Vec<_>>()
    };
    assert_eq!(labels("qq"), labels("gf:32003"));
}

#[test]
fn field_flag_overrides_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_collineation"))
        .args(["classify", "--entry", "unit", "--field", "qq"])
        .env("COLLINEATION_FIELD", "not-a-field")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn text_output() {
    let out = run(&["--output", "text", "classify", "--entry", "unit"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("label") && text.contains("Plane"), "{text}");
}
