//! End-to-end tests of the `ifcalc` binary: golden payloads with their
//! exact 15-significant-digit serializations, the CSV emitters, the trend
//! pipeline, and the exit code contract (0 success, 1 usage/parse,
//! 2 precondition, 3 failed identity check).

use serde_json::Value;
use std::io::Write as _;
use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_ifcalc"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&output.stdout).into_owned(),
        String::from_utf8_lossy(&output.stderr).into_owned(),
        output.status.code().expect("exit code"),
    )
}

fn run_json(args: &[&str]) -> (Value, String, i32) {
    let (stdout, stderr, code) = run(args);
    let value = serde_json::from_str(stdout.trim())
        .unwrap_or_else(|e| panic!("stdout is not one JSON line ({e}): {stdout}"));
    (value, stderr, code)
}

fn num(value: &Value) -> f64 {
    value.as_f64().unwrap_or_else(|| panic!("not a number: {value}"))
}

fn csv_file(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(content.as_bytes()).expect("write");
    file.flush().expect("flush");
    file
}

#[test]
fn eval_golden_subtraction_prints_fifteen_digits() {
    let (stdout, _, code) = run(&["eval", "(0.6,0.3)-(0.1,0.7)"]);
    assert_eq!(code, 0);
    let line = stdout.trim();
    assert!(line.starts_with("{\"command\":\"eval\""), "line: {line}");
    assert!(
        line.contains("\"value\":{\"u\":0.555555555555556,\"v\":0.428571428571429}"),
        "line: {line}"
    );
    assert!(line.contains("\"fallback_used\":false"), "line: {line}");
}

#[test]
fn eval_additive_identity() {
    let (stdout, _, code) = run(&["eval", "(0.3,0.5)+(0,1)"]);
    assert_eq!(code, 0);
    assert!(
        stdout.contains("\"value\":{\"u\":0.300000000000000,\"v\":0.500000000000000}"),
        "stdout: {stdout}"
    );
}

#[test]
fn eval_cube_power() {
    let (stdout, _, code) = run(&["eval", "(0.1,0.7)^3"]);
    assert_eq!(code, 0);
    assert!(
        stdout.contains("\"value\":{\"u\":0.00100000000000000,\"v\":0.973000000000000}"),
        "stdout: {stdout}"
    );
}

#[test]
fn eval_division_without_witness_falls_back_flagged() {
    let (stdout, _, code) = run(&["eval", "(0.6,0.3)/(0.1,0.7)"]);
    assert_eq!(code, 0, "fallbacks are reported, not errors");
    assert!(
        stdout.contains("\"value\":{\"u\":1.00000000000000,\"v\":0}"),
        "stdout: {stdout}"
    );
    assert!(stdout.contains("\"fallback_used\":true"), "stdout: {stdout}");
}

#[test]
fn eval_division_with_witness() {
    let (parsed, _, code) = run_json(&["eval", "(0.1,0.7)/(0.6,0.3)"]);
    assert_eq!(code, 0);
    let value = &parsed["output"]["value"];
    assert!((num(&value["u"]) - 1.0 / 6.0).abs() <= 1e-15);
    assert!((num(&value["v"]) - 4.0 / 7.0).abs() <= 1e-15);
    assert_eq!(parsed["diagnostics"]["fallback_used"], Value::Bool(false));
}

#[test]
fn eval_applies_a_function_by_textual_substitution() {
    let (stdout, _, code) = run(&["eval", "2*(0.1,0.7)^2"]);
    assert_eq!(code, 0);
    assert!(
        stdout.contains("\"value\":{\"u\":0.0199000000000000,\"v\":0.828100000000000}"),
        "stdout: {stdout}"
    );
}

#[test]
fn eval_returns_functions_symbolically() {
    let (parsed, _, code) = run_json(&["eval", "2*X^2"]);
    assert_eq!(code, 0);
    assert_eq!(parsed["output"]["type"], "iff");
    assert_eq!(parsed["output"]["expr"], "2*X^2");
}

#[test]
fn eval_parse_error_exits_one_with_position() {
    let (stdout, stderr, code) = run(&["eval", "(0.1 0.7)"]);
    assert_eq!(code, 1);
    assert!(stdout.is_empty(), "no payload on errors");
    assert!(stderr.contains("1:6"), "stderr: {stderr}");
}

#[test]
fn mvt_square_reproduces_the_known_point() {
    let (parsed, _, code) = run_json(&["mvt", "X^2", "(0.1,0.7)", "(0.6,0.3)"]);
    assert_eq!(code, 0);
    let point = &parsed["output"]["point"];
    assert!((num(&point["u"]) - 0.35).abs() <= 1e-9);
    assert!((num(&point["v"]) - 0.5).abs() <= 1e-9);
    assert!(num(&parsed["output"]["residual_mu"]).abs() <= 1e-12);
    assert!(num(&parsed["output"]["residual_v"]).abs() <= 1e-12);
}

#[test]
fn mvt_identity_hits_the_midpoint_immediately() {
    let (stdout, _, code) = run(&["mvt", "X", "(0.1,0.7)", "(0.6,0.3)"]);
    assert_eq!(code, 0);
    assert!(
        stdout.contains("\"iterations_mu\":0,\"iterations_v\":0"),
        "stdout: {stdout}"
    );
    assert!(
        stdout.contains("\"residual_mu\":0,\"residual_v\":0"),
        "stdout: {stdout}"
    );
    let parsed: Value = serde_json::from_str(stdout.trim()).expect("json");
    assert!((num(&parsed["output"]["point"]["u"]) - 0.35).abs() <= 1e-12);
    assert!((num(&parsed["output"]["point"]["v"]) - 0.5).abs() <= 1e-12);
}

#[test]
fn mvt_swapped_endpoints_exit_two() {
    let (stdout, stderr, code) = run(&["mvt", "X^2", "(0.6,0.3)", "(0.1,0.7)"]);
    assert_eq!(code, 2);
    assert!(stdout.is_empty());
    assert!(!stderr.is_empty());
}

#[test]
fn mvt_rejects_negative_tolerance() {
    let (_, _, code) = run(&["mvt", "X^2", "(0.1,0.7)", "(0.6,0.3)", "--tolerance", "-1e-9"]);
    assert_eq!(code, 1);
}

#[test]
fn cmvt_add_form_passes_on_the_golden_pair() {
    let (parsed, _, code) = run_json(&[
        "cmvt", "X^2", "X^3", "(0.1,0.7)", "(0.6,0.3)", "--form", "add",
    ]);
    assert_eq!(code, 0);
    assert_eq!(parsed["output"]["passed"], Value::Bool(true));
    for side in ["lhs", "rhs"] {
        let pair = &parsed["output"][side];
        assert!((num(&pair["u"]) - 0.1369551369551).abs() <= 5e-13);
        assert!((num(&pair["v"]) - 0.7501778796743).abs() <= 5e-13);
    }
}

#[test]
fn cmvt_with_identity_gamma_passes() {
    let (parsed, _, code) = run_json(&["cmvt", "X^2", "X", "(0.1,0.7)", "(0.6,0.3)"]);
    assert_eq!(code, 0);
    assert_eq!(parsed["output"]["passed"], Value::Bool(true));
}

#[test]
fn cmvt_of_a_function_with_itself_is_bitwise() {
    let (stdout, _, code) = run(&["cmvt", "X^2", "X^2", "(0.1,0.7)", "(0.6,0.3)"]);
    assert_eq!(code, 0);
    assert!(
        stdout.contains("\"max_component_gap\":0,"),
        "stdout: {stdout}"
    );
}

#[test]
fn cmvt_zero_tolerance_fails_with_exit_three() {
    let (stdout, _, code) = run(&[
        "cmvt", "X^2", "X^3", "(0.1,0.7)", "(0.6,0.3)", "--tolerance", "0",
    ]);
    assert_eq!(code, 3, "report still prints, exit signals the failed check");
    assert!(stdout.contains("\"passed\":false"), "stdout: {stdout}");
}

#[test]
fn rolle_constant_function_is_exact() {
    let (stdout, _, code) = run(&["rolle", "(0.5,0.3)", "(0.2,0.4)", "(0.4,0.2)"]);
    assert_eq!(code, 0);
    assert!(
        stdout.contains("\"lhs\":{\"u\":0,\"v\":1.00000000000000}"),
        "stdout: {stdout}"
    );
    assert!(stdout.contains("\"max_component_gap\":0,"), "stdout: {stdout}");
    assert!(stdout.contains("\"passed\":true"), "stdout: {stdout}");
}

#[test]
fn rolle_differing_endpoints_exit_two() {
    let (_, stderr, code) = run(&["rolle", "X^2", "(0.2,0.4)", "(0.4,0.2)"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());
}

#[test]
fn region_csv_contains_known_member() {
    let (stdout, _, code) = run(&["region", "add", "(0.1,0.7)", "--resolution", "11"]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert_eq!(lines.next(), Some("u,v"));
    assert!(
        stdout.contains("0.600000000000000,0.300000000000000"),
        "(0.6,0.3) is reachable from (0.1,0.7): {stdout}"
    );
}

#[test]
fn region_of_zero_anchor_is_the_whole_triangle() {
    let (stdout, _, code) = run(&["region", "add", "(0,1)", "--resolution", "5"]);
    assert_eq!(code, 0);
    // Header plus all grid points with u + v <= 1: 5+4+3+2+1.
    assert_eq!(stdout.lines().count(), 16, "stdout: {stdout}");
}

#[test]
fn sub_region_of_zero_anchor_is_only_zero() {
    let (stdout, _, code) = run(&["region", "sub", "(0,1)", "--resolution", "5"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines, vec!["u,v", "0,1.00000000000000"]);
}

#[test]
fn region_json_envelope_counts_points() {
    let (parsed, _, code) = run_json(&[
        "region", "add", "(0.1,0.7)", "--resolution", "5", "--json",
    ]);
    assert_eq!(code, 0);
    let points = parsed["output"]["points"].as_array().expect("points array");
    assert!(!points.is_empty());
    assert_eq!(
        parsed["diagnostics"]["count"].as_u64(),
        Some(points.len() as u64)
    );
}

#[test]
fn region_json_and_csv_are_mutually_exclusive() {
    let (_, stderr, code) = run(&["region", "add", "(0.1,0.7)", "--json", "--csv"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("mutually exclusive"), "stderr: {stderr}");
}

#[test]
fn curve_csv_passes_through_the_anchor() {
    let (stdout, _, code) = run(&["curve", "(0.35,0.5)", "--samples", "5"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 6);
    assert!(
        stdout.contains("0.350000000000000,0.500000000000000"),
        "anchor row present bitwise: {stdout}"
    );
}

#[test]
fn curve_rejects_degenerate_anchor() {
    let (_, stderr, code) = run(&["curve", "(0,1)", "--samples", "5"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());
}

#[test]
fn trend_classifies_increasing_steps() {
    let file = csv_file("t,u,v\n1,0.1,0.7\n2,0.35,0.5\n3,0.6,0.3\n");
    let (parsed, _, code) = run_json(&["trend", file.path().to_str().expect("utf8")]);
    assert_eq!(code, 0);
    let steps = parsed["output"]["steps"].as_array().expect("steps");
    assert_eq!(steps.len(), 2);
    for step in steps {
        assert_eq!(step["classification"], "increasing");
        assert_eq!(step["fallback_used"], Value::Bool(false));
        assert_eq!(step["derivative"], Value::Null, "no phi given");
    }
    assert_eq!(parsed["output"]["summary"]["increasing"].as_u64(), Some(2));
    assert_eq!(parsed["output"]["summary"]["not_comparable"].as_u64(), Some(0));
}

#[test]
fn trend_single_row_is_an_empty_trend() {
    let file = csv_file("t,u,v\n1,0.4,0.4\n");
    let (parsed, _, code) = run_json(&["trend", file.path().to_str().expect("utf8")]);
    assert_eq!(code, 0);
    assert_eq!(parsed["output"]["steps"].as_array().map(Vec::len), Some(0));
    assert_eq!(parsed["output"]["summary"]["steps"].as_u64(), Some(0));
    assert_eq!(parsed["output"]["summary"]["increasing"].as_u64(), Some(0));
}

#[test]
fn trend_reports_non_comparable_steps_with_fallback() {
    let file = csv_file("t,u,v\n1,0.6,0.3\n2,0.1,0.7\n");
    let (parsed, _, code) = run_json(&["trend", file.path().to_str().expect("utf8")]);
    assert_eq!(code, 0);
    let step = &parsed["output"]["steps"][0];
    assert_eq!(step["classification"], "not-comparable");
    assert_eq!(step["fallback_used"], Value::Bool(true));
    assert_eq!(num(&step["difference"]["u"]), 0.0);
    assert_eq!(num(&step["difference"]["v"]), 1.0);
}

#[test]
fn trend_with_phi_adds_secant_derivatives() {
    let file = csv_file("t,u,v\n1,0.1,0.7\n2,0.35,0.5\n3,0.6,0.3\n");
    let (parsed, _, code) = run_json(&[
        "trend", file.path().to_str().expect("utf8"), "--phi", "X^2",
    ]);
    assert_eq!(code, 0);
    let step = &parsed["output"]["steps"][0];
    assert_eq!(step["derivative"]["kind"], "secant-addition");
    let expected_u = (0.9 / 0.99) * ((0.1225 - 0.01) / 0.25);
    assert!((num(&step["derivative"]["value"]["u"]) - expected_u).abs() <= 1e-12);
}

#[test]
fn trend_rejects_wrong_header() {
    let file = csv_file("time,u,v\n1,0.1,0.7\n");
    let (_, stderr, code) = run(&["trend", file.path().to_str().expect("utf8")]);
    assert_eq!(code, 1);
    assert!(stderr.contains("t,u,v"), "stderr: {stderr}");
}

#[test]
fn trend_rejects_invalid_row_with_its_number() {
    let file = csv_file("t,u,v\n1,1.3,0.2\n");
    let (_, stderr, code) = run(&["trend", file.path().to_str().expect("utf8")]);
    assert_eq!(code, 1);
    assert!(stderr.contains("row 1"), "stderr: {stderr}");
}

#[test]
fn trend_missing_file_exits_one() {
    let (_, stderr, code) = run(&["trend", "/nonexistent/series.csv"]);
    assert_eq!(code, 1);
    assert!(!stderr.is_empty());
}

#[test]
fn derive_add_form_at_an_interior_point() {
    let (parsed, _, code) = run_json(&["derive", "X^2", "(0.35,0.5)"]);
    assert_eq!(code, 0);
    assert_eq!(parsed["output"]["kind"], "addition");
    assert_eq!(parsed["output"]["is_valid_ifn"], Value::Bool(true));
    let value = &parsed["output"]["value"];
    assert!((num(&value["u"]) - (0.65 / 0.8775) * 0.7).abs() <= 1e-12);
    assert!((num(&value["v"]) - 1.0 / 3.0).abs() <= 1e-12);
}

#[test]
fn derive_mul_form_reports_values_outside_the_triangle() {
    let (stdout, _, code) = run(&["derive", "X^2", "(0.5,0.5)", "--form", "mul"]);
    assert_eq!(code, 0, "invalid derivative values are reported, not errors");
    assert!(
        stdout.contains("\"value\":{\"u\":-1.00000000000000,\"v\":2.00000000000000}"),
        "stdout: {stdout}"
    );
    assert!(stdout.contains("\"is_valid_ifn\":false"), "stdout: {stdout}");
    assert!(stdout.contains("\"kind\":\"multiplication\""), "stdout: {stdout}");
}

#[test]
fn help_documents_the_operator_mapping_and_exits_zero() {
    let (stdout, _, code) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("⊕"), "operator mapping documented: {stdout}");
    for sub in ["eval", "mvt", "cmvt", "rolle", "region", "curve", "trend", "derive"] {
        assert!(stdout.contains(sub), "missing subcommand {sub}: {stdout}");
    }
    assert!(stdout.to_lowercase().contains("experimental"), "stdout: {stdout}");
}

#[test]
fn unknown_arguments_exit_one() {
    let (_, _, code) = run(&["eval", "(0.1,0.7)", "--frobnicate"]);
    assert_eq!(code, 1);
    let (_, _, code) = run(&["no-such-command"]);
    assert_eq!(code, 1);
    let (_, _, code) = run(&[]);
    assert_eq!(code, 1);
}
