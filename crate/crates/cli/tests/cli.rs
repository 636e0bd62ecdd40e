use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use tucker_cli::{run, Output};

fn data(rel: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(rel)
        .display()
        .to_string()
}

fn tucker(args: &[&str]) -> Output {
    run(std::iter::once("tucker").chain(args.iter().copied()))
}

#[test]
fn solve_afiro_json() {
    let out = tucker(&["solve", &data("netlib/afiro.mps"), "--json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["status_primal"], "F");
    assert_eq!(v["status_dual"], "F");
    let f = v["objective"].as_f64().unwrap();
    assert!((f - -464.75314285714273).abs() <= 1e-6 * 464.75);
    assert_eq!(v["solution"].as_object().unwrap().len(), 32);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        [
            "problem",
            "status_primal",
            "status_dual",
            "objective",
            "iterations",
            "cycle_flag",
            "solution",
            "dual_solution",
            "certificates",
            "iteration_count_vs_m_plus_n"
        ]
    );
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["solve", &data("netlib/sc50a.mps"), "--json"];
    assert_eq!(tucker(&args), tucker(&args));
}

#[test]
fn classify_galenet_is_primal_infeasible() {
    let out = tucker(&["classify", &data("netlib/galenet.mps")]);
    assert!(out.code == 2 || out.code == 4, "exit {}", out.code);
    assert!(out.stdout.starts_with("(Φ,"));
}

#[test]
fn classify_json() {
    let out = tucker(&["classify", &data("netlib/itest2.mps"), "--json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["status_primal"], "Phi");
}

#[test]
fn unbounded_exit_code_and_certificate() {
    let out = tucker(&["solve", &data("cycling/marshall_suurballe.mps"), "--json"]);
    assert_eq!(out.code, 3);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["objective"], Value::Null);
    assert_eq!(v["certificates"][0]["kind"], "primal_ray");
}

#[test]
fn missing_file_is_a_data_error() {
    let out = tucker(&["solve", "missing.mps"]);
    assert_eq!(out.code, 65);
    assert_eq!(out.stderr.lines().count(), 1);
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_file_is_a_data_error() {
    let dir = std::env::temp_dir().join(format!("tucker-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.mps");
    std::fs::write(&path, "NAME X\nROWS\n N COST\nCOLUMS\nENDATA\n").unwrap();
    let out = tucker(&["solve", path.to_str().unwrap()]);
    assert_eq!(out.code, 65);
    assert!(out.stderr.contains("line 4"), "{}", out.stderr);
}

#[test]
fn usage_errors() {
    assert_eq!(tucker(&["solve", &data("netlib/afiro.mps"), "--bogus"]).code, 64);
    assert_eq!(tucker(&[]).code, 64);
    assert_eq!(tucker(&["solve"]).code, 64);
    assert_eq!(
        tucker(&["solve", &data("netlib/afiro.mps"), "--max-iters", "0"]).code,
        64
    );
    assert_eq!(
        tucker(&["solve", &data("netlib/afiro.mps"), "--strategy-order", "PSPPI,DSPNI"]).code,
        64
    );
    assert_eq!(tucker(&["--help"]).code, 0);
}

#[test]
fn iteration_limit_exit_code() {
    let out = tucker(&["solve", &data("netlib/afiro.mps"), "--max-iters", "3"]);
    assert_eq!(out.code, 5);
    assert!(out.stderr.contains("iteration limit"));
}

#[test]
fn strategy_order_within_tiers() {
    let out = tucker(&[
        "solve",
        &data("netlib/afiro.mps"),
        "--json",
        "--strategy-order",
        "PSPPI,DSPNI,DTPNI,PTPPI,PSPZI,DSPZI",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
}

#[test]
fn trace_and_oracle_check_go_to_stderr() {
    let out = tucker(&["solve", &data("cycling/beale.mps"), "--trace", "--oracle-check"]);
    assert_eq!(out.code, 0);
    let pivots = out
        .stderr
        .lines()
        .filter(|l| l.starts_with(|c: char| c.is_ascii_digit()))
        .count();
    assert!(pivots >= 1);
    assert!(out.stderr.contains("oracle check agrees"), "{}", out.stderr);
}

#[test]
fn bench_rows_are_sorted_by_name() {
    let out = tucker(&["bench", &data("cycling")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let names: Vec<&str> = out
        .stdout
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().next().unwrap())
        .collect();
    assert_eq!(names, ["beale", "chvatal", "kuhn", "marshall_suurballe"]);
}

#[test]
fn binary_exit_code() {
    let status = Command::new(env!("CARGO_BIN_EXE_tucker"))
        .args(["classify", &data("netlib/itest6.mps")])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&status.stdout).trim(), "(Φ,∞)");
}
