use std::path::PathBuf;

use besselint::cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["besselint"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.to_string_lossy().into_owned()
}

#[test]
fn coeffs_text() {
    let (code, out, _) = call(&["coeffs", "--mu", "4", "--nu", "7"]);
    assert_eq!(code, 0);
    assert!(out.contains("degree 6"));
    assert!(out.contains("6\t184320"));
}

#[test]
fn coeffs_json_schema() {
    let (code, out, _) = call(&["--format", "json", "coeffs", "--mu", "4", "--nu", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["mu"], 4);
    assert_eq!(v["nu"], 3);
    assert_eq!(v["variant"], "cosh");
    assert_eq!(v["prefactor_pow2"], 4);
    assert_eq!(v["degree"], 3);
    assert_eq!(v["coeffs"], serde_json::json!(["8", "48", "120", "120"]));
}

#[test]
fn coeffs_sinh_and_csv() {
    let (code, out, _) = call(&[
        "--variant",
        "sinh",
        "--format",
        "csv",
        "coeffs",
        "--mu",
        "2",
        "--nu",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "p,coeff\n0,0\n1,2\n");
}

#[test]
fn parity_error_is_usage() {
    let (code, out, err) = call(&["coeffs", "--mu", "4", "--nu", "6"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("opposite parity"));
    let (code, _, err) = call(&["--variant", "sinh", "coeffs", "--mu", "3", "--nu", "2"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn eval_json_matches_library() {
    let (code, out, _) = call(&[
        "--format", "json", "eval", "--mu", "4", "--nu", "7", "--z", "2+1i",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let lib = besselint::eval_f(4, 7, num_complex::Complex64::new(2.0, 1.0))
        .unwrap()
        .value;
    assert_eq!(v["value_re"].as_f64().unwrap(), lib.re);
    assert_eq!(v["value_im"].as_f64().unwrap(), lib.im);
    assert!(v["est_error"].is_null());
    assert_eq!(v["spec"]["case"]["parity"], "even_mu");
}

#[test]
fn eval_separate_imaginary_part() {
    let (_, a, _) = call(&["eval", "--mu", "3", "--nu", "4", "--z", "1", "--zi", "-3"]);
    let (_, b, _) = call(&["eval", "--mu", "3", "--nu", "4", "--z", "1-3i"]);
    assert_eq!(a, b);
    assert!(a.contains("e"));
}

#[test]
fn eval_domain_errors() {
    assert_eq!(call(&["eval", "--mu", "4", "--nu", "7", "--z", "0"]).0, 2);
    assert_eq!(
        call(&["eval", "--mu", "4", "--nu", "7", "--z", "-1+2i"]).0,
        2
    );
    assert_eq!(
        call(&["eval", "--mu", "4", "--nu", "7", "--z", "nonsense"]).0,
        2
    );
}

#[test]
fn oracle_agrees_with_closed_form() {
    let (code, out, _) = call(&[
        "--format", "json", "oracle", "--mu", "4", "--nu", "7", "--z", "2",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let lib = besselint::eval_f(4, 7, num_complex::Complex64::new(2.0, 0.0))
        .unwrap()
        .value;
    let got = v["value_re"].as_f64().unwrap();
    assert!((got - lib.re).abs() <= 1e-8 * lib.re);
    assert!(v["est_error"].as_f64().unwrap() > 0.0);
    assert_eq!(v["spec"]["converged"], true);
}

#[test]
fn oracle_accepts_non_integer_order() {
    let (code, out, _) = call(&["oracle", "--mu", "2", "--nu", "0.3", "--z", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("quadrature"));
}

#[test]
fn oracle_rejects_bad_input() {
    assert_eq!(call(&["oracle", "--mu", "0", "--nu", "1", "--z", "0"]).0, 2);
    assert_eq!(
        call(&["--tol", "0", "oracle", "--mu", "0", "--nu", "1", "--z", "1"]).0,
        2
    );
    assert_eq!(
        call(&["oracle", "--mu", "-1", "--nu", "1", "--z", "1"]).0,
        2
    );
}

#[test]
fn verify_small_grid_passes() {
    let (code, out, _) = call(&[
        "verify", "--max-m", "1", "--max-n", "1", "--z-grid", "1,2+1i",
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("fail 0"));
}

#[test]
fn verify_json_summary() {
    let (code, out, _) = call(&["--format", "json", "verify", "--max-m", "0", "--max-n", "0"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let s = &v["summary"];
    assert_eq!(s["fail"], 0);
    assert_eq!(
        s["total"].as_u64().unwrap(),
        s["pass"].as_u64().unwrap() + s["fail"].as_u64().unwrap()
    );
    assert_eq!(
        v["entries"].as_array().unwrap().len() as u64,
        s["total"].as_u64().unwrap()
    );
}

#[test]
fn verify_detects_corrupted_tables() {
    let path = fixture("corrupted_tables.json");
    let (code, out, _) = call(&["verify", "--max-m", "0", "--max-n", "0", "--expect", &path]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL  published_table"));
    assert!(out.contains("184321"));
}

#[test]
fn verify_accepts_custom_tables() {
    let path = fixture("good_tables.json");
    let (code, out, _) = call(&["verify", "--max-m", "0", "--max-n", "0", "--expect", &path]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn verify_missing_expect_file() {
    let (code, _, err) = call(&["verify", "--expect", "/nonexistent/tables.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("nonexistent"));
}

#[test]
fn help_and_usage() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("coeffs"));
    assert_eq!(call(&[]).0, 2);
    assert_eq!(call(&["coeffs", "--mu", "4"]).0, 2);
}
