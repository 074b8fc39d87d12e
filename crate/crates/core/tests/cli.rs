use std::path::PathBuf;

use gencontact::cli::run;
use serde_json::Value;

fn gcs(args: &[&str]) -> (i32, String) {
    run(std::iter::once("gcs").chain(args.iter().copied()))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gcs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn catalog_checks_exit_zero() {
    for args in [
        &["--algebra", "L5_3", "check-jacobi"][..],
        &["--algebra", "L5_3", "transversal"],
        &["--algebra", "L5_6", "check-contact"],
        &["--algebra", "L5_8", "check-complex"],
        &["--algebra", "L5_2", "check-gcs"],
        &["--algebra", "L5_3", "obstruction"],
        &["--algebra", "L5_3", "build"],
    ] {
        let (code, out) = gcs(args);
        assert_eq!(code, 0, "{args:?}: {out}");
    }
}

#[test]
fn refutations_exit_one_and_input_errors_exit_two() {
    assert_eq!(gcs(&["--algebra", "L5_7", "check-jacobi"]).0, 1);
    assert_eq!(gcs(&["--algebra", "L5_7", "transversal"]).0, 1);
    // an invalid stored pair is an input error for commands that need a pair
    assert_eq!(gcs(&["--algebra", "L5_7", "obstruction"]).0, 2);
    let (code, out) = gcs(&["--algebra", "L6_1", "check-jacobi"]);
    assert_eq!(code, 2);
    assert!(out.contains("L5_1"), "{out}");
    assert_eq!(gcs(&["check-jacobi"]).0, 2);
    assert_eq!(gcs(&["--algebra", "L5_1", "check-contact"]).0, 2);
    assert_eq!(gcs(&["frobnicate"]).0, 2);
}

#[test]
fn table_reports_the_l57_cell() {
    let (code, out) = gcs(&["table"]);
    assert_eq!(code, 1);
    assert!(
        out.contains("mismatch: L5_7 generalized contact: expected yes, computed no"),
        "{out}"
    );
    assert_eq!(out.matches("mismatch").count(), 1);
}

#[test]
fn json_output_is_deterministic() {
    let a = gcs(&["--json", "--algebra", "L5_3", "obstruction"]);
    let b = gcs(&["--json", "--algebra", "L5_3", "obstruction"]);
    assert_eq!(a, b);
    let v: Value = serde_json::from_str(&a.1).unwrap();
    assert_eq!(v["check"], "obstruction");
    assert_eq!(v["verdict"], "verified");
    assert_eq!(v["witness"]["agreement"], true);
}

#[test]
fn methods_agree_on_extra_l57_pair() {
    let tensor = scratch(
        "j.json",
        r#"{"space":"vector","terms":[{"mono":["e1","e5"],"coeff":"1"},{"mono":["e3","e4"],"coeff":"1"}]}"#,
    );
    let k = scratch(
        "k.json",
        r#"{"field":"C","generators":[
            {"space":"vector","terms":[{"mono":["e1"],"coeff":"1"}]},
            {"space":"vector","terms":[{"mono":["e3"],"coeff":"1"}]},
            {"space":"vector","terms":[{"mono":["e4"],"coeff":"1"}]},
            {"space":"vector","terms":[{"mono":["e5"],"coeff":"1"}]},
            {"space":"vector","terms":[{"mono":["unit"],"coeff":"1"},{"mono":["e2"],"coeff":{"re":"0","im":"1"}}]}]}"#,
    );
    let (t, kk) = (tensor.to_str().unwrap(), k.to_str().unwrap());
    assert_eq!(
        gcs(&["--algebra", "L5_7", "transversal", "--tensor", t, "--K", kk]).0,
        0
    );
    for method in ["direct", "spectral", "both"] {
        let (code, out) = gcs(&[
            "--json",
            "--algebra",
            "L5_7",
            "obstruction",
            "--tensor",
            t,
            "--K",
            kk,
            "--method",
            method,
        ]);
        assert_eq!(code, 1, "{method}: {out}");
    }
    let (code, _) = gcs(&["--algebra", "L5_7", "build", "--tensor", t, "--K", kk]);
    assert_eq!(code, 1);
}

#[test]
fn build_writes_a_payload_that_checks() {
    let dir = std::env::temp_dir().join(format!("gcs-cli-build-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("gcs.json");
    let (code, _) = gcs(&["--algebra", "L5_3", "--out", out.to_str().unwrap(), "build"]);
    assert_eq!(code, 0);
    let payload: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let sub = scratch("subspace.json", &payload["subspace"].to_string());
    let (code, text) = gcs(&[
        "--algebra",
        "L5_3",
        "check-gcs",
        "--subspace",
        sub.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{text}");
}

#[test]
fn algebra_files_are_accepted() {
    let alg = scratch(
        "heis.json",
        r#"{"name":"h3","dim":3,"basis":["x","y","z"],"brackets":[{"x":"x","y":"y","value":{"z":"1"}}]}"#,
    );
    let theta = scratch(
        "theta.json",
        r#"{"space":"form","terms":[{"mono":["z"],"coeff":"1"}]}"#,
    );
    let (code, out) = gcs(&[
        "--algebra",
        alg.to_str().unwrap(),
        "check-contact",
        "--form",
        theta.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}");
    let broken = scratch(
        "broken.json",
        r#"{"name":"b","dim":2,"basis":["x","y"],"brackets":[{"x":"x","y":"w","value":{}}]}"#,
    );
    assert_eq!(
        gcs(&["--algebra", broken.to_str().unwrap(), "check-jacobi"]).0,
        2
    );
}

#[test]
fn pages_lists_split_dimensions() {
    let (code, out) = gcs(&["--algebra", "L5_3", "pages", "--max-degree", "2"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() > 5, "{out}");
}
