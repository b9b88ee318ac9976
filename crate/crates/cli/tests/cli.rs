//! End-to-end tests of the `anyon` binary: shipped examples, JSON shapes,
//! exit codes, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_anyon"))
}

fn example(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(output: &Output) -> serde_json::Value {
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    serde_json::from_slice(&output.stdout).expect("stdout is valid JSON")
}

#[test]
fn shipped_links_reproduce_reference_values() {
    for (file, expected) in
        [("fig3_left.lnk", -2i64), ("fig3_trefoil.gauss", 3), ("fig3_fig8.gauss", 0)]
    {
        let out = run(&["link", example(file).to_str().unwrap()]);
        let doc = json_of(&out);
        assert_eq!(doc["total_crossing_number"], serde_json::json!(expected), "{file}");
    }
}

#[test]
fn expect_prints_unit_phase() {
    let out = run(&["expect", example("fig3_left.lnk").to_str().unwrap(), "--K", "2"]);
    let doc = json_of(&out);
    let value = doc["expectation"]["value"].as_array().unwrap();
    assert!((value[0].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(value[1].as_f64().unwrap().abs() < 1e-12);
}

#[test]
fn negative_level_is_accepted() {
    let out = run(&["expect", example("fig3_trefoil.gauss").to_str().unwrap(), "--K", "-3"]);
    let doc = json_of(&out);
    let value = doc["expectation"]["value"].as_array().unwrap();
    assert!((value[0].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn braid_reports_phase_and_closure() {
    let out = run(&["braid", "2: 1 1 1", "--K", "3"]);
    let doc = json_of(&out);
    assert_eq!(doc["strands"], serde_json::json!(2));
    assert_eq!(doc["exponent_sum"], serde_json::json!(3));
    assert_eq!(doc["permutation"], serde_json::json!([1, 0]));
    assert_eq!(doc["closure"]["num_components"], serde_json::json!(1));
    assert_eq!(doc["closure"]["total_crossing_number"], serde_json::json!(3));
    let phase = doc["phase"].as_array().unwrap();
    assert!((phase[0].as_f64().unwrap() - 1.0).abs() < 1e-12);
    // Phase equals the closure expectation value.
    let closure = doc["closure_expectation"].as_array().unwrap();
    assert!((phase[0].as_f64().unwrap() - closure[0].as_f64().unwrap()).abs() < 1e-12);
    assert!((phase[1].as_f64().unwrap() - closure[1].as_f64().unwrap()).abs() < 1e-12);
}

#[test]
fn algebra_operations_match_reference_strings() {
    let mul = json_of(&run(&["algebra", "mul", "W(1,0)", "W(0,1)"]));
    assert_eq!(mul["result"], serde_json::json!("z^1 * Wh(1,1)"));
    assert_eq!(mul["result_w_basis"], serde_json::json!("z^2 * W(1,1)"));

    let act = json_of(&run(&["algebra", "act", "S", "Wh(1,0)"]));
    assert_eq!(act["result"], serde_json::json!("Wh(0,-1)"));

    let stab = json_of(&run(&["algebra", "stabilize", "Wh(1,1) - z^2 * Wh(1,1)"]));
    assert_eq!(stab["result"], serde_json::json!("0"));

    let matrix = json_of(&run(&["algebra", "act", "[[1,1],[0,1]]", "Wh(1,0)"]));
    assert_eq!(matrix["result"], serde_json::json!("Wh(1,1)"));
}

#[test]
fn rep_reports_relation_residual_and_intertwiners() {
    let doc = json_of(&run(&["rep", "--K", "2"]));
    assert!(doc["uv_relation_residual"].as_f64().unwrap() < 1e-12);
    assert_eq!(doc["intertwiners"]["S"]["found"], serde_json::json!(true));
    assert_eq!(doc["intertwiners"]["T"]["found"], serde_json::json!(true));
    assert!(doc["modular_relations"]["s_fourth"]["residual"].as_f64().unwrap() < 1e-9);
    assert!(doc["modular_relations"]["st_cubed"]["residual"].as_f64().unwrap() < 1e-9);
    // U at K=2, sector (0,0) is diag(1, -1).
    let u = &doc["generators"]["U"];
    assert!((u[0][0][0].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((u[1][1][0].as_f64().unwrap() + 1.0).abs() < 1e-12);
}

#[test]
fn rep_on_moved_sector_reports_target() {
    let doc = json_of(&run(&["rep", "--K", "4", "--sector", "0.3,0"]));
    assert_eq!(doc["intertwiners"]["S"]["found"], serde_json::json!(false));
    let target = doc["intertwiners"]["S"]["mapped_sector"].as_array().unwrap();
    assert!(target[0].as_f64().unwrap().abs() < 1e-9);
    assert!((target[1].as_f64().unwrap() - 0.3).abs() < 1e-9);
    assert!(doc["modular_relations"].is_null());
}

#[test]
fn chern_builtin_and_csv_models() {
    let doc = json_of(&run(&["chern", "qwz:m=3", "--N", "64"]));
    assert_eq!(doc["degree"], serde_json::json!(0));
    assert!(doc["min_gap"].as_f64().unwrap() >= 1.0);

    let doc = json_of(&run(&["chern", "qwz:m=1", "--N", "32"]));
    assert_eq!(doc["degree"], serde_json::json!(-1));

    // CSV fixes its own resolution.
    let doc = json_of(&run(&["chern", example("qwz_m3_n16.csv").to_str().unwrap()]));
    assert_eq!(doc["N"], serde_json::json!(16));
    assert_eq!(doc["degree"], serde_json::json!(0));

    let doc = json_of(&run(&["chern", example("constant_north_n4.csv").to_str().unwrap()]));
    assert_eq!(doc["degree"], serde_json::json!(0));
}

#[test]
fn exit_code_2_for_parse_errors() {
    let dir = tempdir();
    let bad = dir.join("bad.lnk");
    std::fs::write(&bad, "components 1\ncross 0 2 +\n").unwrap();
    let out = run(&["link", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 2"), "stderr: {stderr}");

    let out = run(&["braid", "2: 2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["algebra", "mul", "W(1", "W(0,1)"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["algebra", "act", "[[1,1],[1,1]]", "Wh(1,0)"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["rep", "--K", "2", "--sector", "1.5,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_code_3_for_numerical_failures() {
    // Gap closes at (π, π) for m = 2.
    let out = run(&["chern", "qwz:m=2", "--N", "64"]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("gap"), "stderr: {stderr}");

    // Exponent overflow in the algebra.
    let out = run(&["algebra", "mul", "Wh(9000000000000000000,0)", "Wh(9000000000000000000,0)"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    for args in [
        vec!["rep", "--K", "3", "--sector", "0,0"],
        vec!["chern", "qwz:m=1", "--N", "16"],
        vec!["braid", "4: 1 -2 3 -1", "--K", "5"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "non-deterministic output for {args:?}");
    }
}

#[test]
fn table_format_renders() {
    let out = bin()
        .args(["link", example("fig3_left.lnk").to_str().unwrap(), "--format", "table"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("total_crossing_number: -2"), "{text}");
}

fn tempdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("anyon-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}
