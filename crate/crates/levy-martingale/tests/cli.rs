//! Black-box tests of the `levy-mtg` binary: JSON report shape, exit
//! codes, reproducibility of identical invocations, and the artifact
//! files the simulate subcommand writes.

use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_levy-mtg"));
    // The seed requirement keys off CI; keep the default environment
    // clean so tests control it explicitly.
    c.env_remove("CI");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

/// Run expecting success; return raw stdout and the parsed report.
fn run_ok(args: &[&str]) -> (String, Value) {
    let out = run(args);
    let stdout = String::from_utf8(out.stdout).expect("utf-8 stdout");
    assert!(
        out.status.success(),
        "args {args:?} failed: {}\n{stdout}",
        String::from_utf8_lossy(&out.stderr)
    );
    // Piped stderr is not a terminal, so the table view must stay off.
    assert!(out.stderr.is_empty(), "unexpected stderr: {}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(&stdout).expect("stdout is one JSON document");
    (stdout, report)
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn describe_emits_versioned_report() {
    let (stdout, report) = run_ok(&["describe", "brownian"]);
    assert!(
        stdout.starts_with("{\"schema\":1,\"command\":\"describe\""),
        "envelope prefix wrong: {}",
        &stdout[..60.min(stdout.len())]
    );
    assert_eq!(report["config"]["process"]["catalog"], "brownian");
    assert_eq!(report["result"]["nontrivial"], true);
    // psi(1) = 1/2 for standard Brownian motion (xi = 1 is the default
    // grid's third entry).
    let sample = &report["result"]["exponent_samples"][2];
    assert_eq!(sample["xi"], 1.0);
    assert_eq!(sample["re"], 0.5);
    assert_eq!(sample["im"], 0.0);
    // Infinite exponential-moment endpoints serialize as null.
    assert_eq!(report["result"]["exp_moment_domain"], serde_json::json!([null, null]));
    // The invocation echo makes the run reproducible from the report.
    let invocation: Vec<&str> = report["invocation"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    assert_eq!(&invocation[1..], &["describe", "brownian"]);
}

#[test]
fn floats_carry_seventeen_significant_digits() {
    let (stdout, report) = run_ok(&["funceq", "solve", "--p", "0,-6,3", "--y", "2"]);
    // q = x (x - 2)(x - 4) / 2; the solver reports ascending coefficients.
    let q: Vec<f64> = report["result"]["q"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    assert_eq!(q, vec![0.0, 4.0, -3.0, 0.5]);
    assert_eq!(report["result"]["degree"], 3);
    assert_eq!(report["result"]["residual"], 0.0);
    // 17 significant digits in scientific notation, bit-exact round trip.
    assert!(stdout.contains("5.0000000000000000e-1"), "0.5 not in 17-digit form: {stdout}");
    assert!(stdout.contains("-3.0000000000000000e0"));
}

#[test]
fn classify_reports_flat_verdict_records() {
    let (_, report) = run_ok(&["classify", "--process", "brownian", "--poly", "0,0,5"]);
    let r = &report["result"];
    assert_eq!(r["verdict"], "martingale-function");
    assert_eq!(r["alpha"], 5.0);
    assert_eq!(r["witness_coeffs"], Value::Null);
    assert!(r["tolerance_used"].as_f64().unwrap() > 0.0);

    let (_, report) = run_ok(&["classify", "--process", "brownian", "--poly", "0,0,0,1"]);
    let r = &report["result"];
    assert_eq!(r["verdict"], "not-martingale-function");
    assert_eq!(r["alpha"], Value::Null);
    // A x^3 = 3x: the witness is the non-constant remainder.
    assert_eq!(r["witness_coeffs"], serde_json::json!([0.0, 3.0]));

    let (_, report) = run_ok(&["classify", "--process", "brownian", "--expmix", "1,1,1,2"]);
    let r = &report["result"];
    assert_eq!(r["verdict"], "not-martingale-function");
    assert_eq!(r["witness_coeffs"], serde_json::json!([0.5, 2.0]));
}

#[test]
fn moments_and_generator_payloads() {
    let (_, report) = run_ok(&[
        "moments", "--process", "brownian", "--order", "4", "--time", "1",
    ]);
    let r = &report["result"];
    assert_eq!(r["finite"], serde_json::json!([true, true, true, true]));
    assert_eq!(r["cumulants"], serde_json::json!([0.0, 1.0, 0.0, 0.0]));
    // mu_4(t) = 3 t^2, reported as ascending t-coefficients.
    assert_eq!(r["moment_polynomials"][4], serde_json::json!([0.0, 0.0, 3.0]));
    assert_eq!(r["at_time"]["moments"], serde_json::json!([0.0, 1.0, 0.0, 3.0]));

    let (_, report) = run_ok(&["gen", "--process", "gamma", "--poly", "0,0,1"]);
    let image: Vec<f64> = report["result"]["image"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    // A x^2 = 2 kappa_1 x + kappa_2 = 2x + 1 for the unit gamma process.
    assert_eq!(image.len(), 2);
    assert!((image[0] - 1.0).abs() <= 1e-9, "kappa_2 off: {}", image[0]);
    assert!((image[1] - 2.0).abs() <= 1e-9, "2 kappa_1 off: {}", image[1]);

    let (_, report) = run_ok(&["gen", "--process", "brownian", "--exp-rate", "2"]);
    assert_eq!(report["result"]["eta"], 2.0);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["describe", "gamma"],
        vec![
            "mtg-test", "--process", "brownian", "--mode", "additive", "--f", "poly:0,0,1",
            "--n-paths", "2000", "--seed", "9",
        ],
        vec!["exp-solve", "--process", "gamma", "--alpha", "0.3"],
    ] {
        let (first, _) = run_ok(&args);
        let (second, _) = run_ok(&args);
        assert_eq!(first, second, "re-run of {args:?} differed");
    }
}

#[test]
fn exp_solve_finds_roots_and_ignores_the_horizon() {
    let (stdout_t1, report) = run_ok(&[
        "exp-solve", "--process", "brownian", "--alpha", "0.5", "--time", "1",
    ]);
    let roots = report["result"]["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 2);
    assert!((roots[0]["lambda"].as_f64().unwrap() + 1.0).abs() <= 1e-9);
    assert!((roots[1]["lambda"].as_f64().unwrap() - 1.0).abs() <= 1e-9);
    assert!(roots.iter().all(|r| r["residual"].as_f64().unwrap() <= 1e-10));
    assert_eq!(report["config"]["time"], 1.0);

    // The equation is per unit time: a different nominal horizon changes
    // only the config echo, never a bit of the result payload.
    let (stdout_t3, report3) = run_ok(&[
        "exp-solve", "--process", "brownian", "--alpha", "0.5", "--time", "3",
    ]);
    assert_eq!(report3["config"]["time"], 3.0);
    let result_text = |s: &str| {
        let at = s.find("\"result\":").expect("result key");
        s[at..].to_string()
    };
    assert_eq!(result_text(&stdout_t1), result_text(&stdout_t3));
}

#[test]
fn simulate_writes_csv_and_binary_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("paths.csv");
    let bin_file = dir.path().join("paths.f64");
    // Enough paths that the fourth-moment concentration diagnostic is out
    // of its small-sample noise regime.
    let (_, report) = run_ok(&[
        "simulate", "--process", "brownian", "--horizon", "1", "--cells", "4",
        "--n-paths", "500", "--seed", "3",
        "--out", csv.to_str().unwrap(),
        "--binary", bin_file.to_str().unwrap(),
    ]);
    assert_eq!(report["result"]["n_paths"], 500);
    assert_eq!(report["result"]["heavy_tailed"], false);
    let fp = report["result"]["spec_fingerprint"].as_str().unwrap();
    assert_eq!(fp.len(), 16);
    assert!(fp.chars().all(|c| c.is_ascii_hexdigit()));

    // CSV: a header row of the five grid times, then one row per path,
    // every field a parseable float and every path starting at 0.
    let text = std::fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 501);
    let header: Vec<f64> = rows[0].split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(header, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    for row in &rows[1..] {
        let vals: Vec<f64> = row.split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(vals.len(), 5);
        assert_eq!(vals[0], 0.0);
    }

    // Binary: column-major little-endian f64, so 5 columns x 500 paths,
    // the first column (time 0) identically zero.
    let bytes = std::fs::read(&bin_file).unwrap();
    assert_eq!(bytes.len(), 5 * 500 * 8);
    for chunk in bytes[..500 * 8].chunks_exact(8) {
        assert_eq!(f64::from_le_bytes(chunk.try_into().unwrap()), 0.0);
    }

    // Same invocation, same artifact bytes.
    let csv2 = dir.path().join("paths2.csv");
    run_ok(&[
        "simulate", "--process", "brownian", "--horizon", "1", "--cells", "4",
        "--n-paths", "500", "--seed", "3", "--out", csv2.to_str().unwrap(),
    ]);
    assert_eq!(text, std::fs::read_to_string(&csv2).unwrap());
}

#[test]
fn usage_errors_exit_two() {
    // Missing required --out (rejected by the argument parser).
    let out = run(&["simulate", "--process", "brownian", "--horizon", "1", "--cells", "4"]);
    assert_eq!(exit_code(&out), 2);

    // Unknown catalog name (rejected by validation).
    let out = run(&["describe", "nosuch"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("error:"));

    // Malformed polynomial.
    let out = run(&["classify", "--process", "brownian", "--poly", "1,,2"]);
    assert_eq!(exit_code(&out), 2);

    // Mutually exclusive candidates.
    let out = run(&[
        "classify", "--process", "brownian", "--poly", "0,0,1", "--expmix", "1,1,1,2",
    ]);
    assert_eq!(exit_code(&out), 2);

    // --param does not combine with --config.
    let out = run(&["describe", "--process", "brownian", "--param", "bad"]);
    assert_eq!(exit_code(&out), 2);

    // Help is not an error.
    let out = run(&["--help"]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn numerical_failures_exit_three() {
    // e^{900 x} overflows along Brownian paths: the sampler refuses to
    // aggregate non-finite values and reports how many it saw.
    let out = run(&[
        "mtg-test", "--process", "brownian", "--mode", "mult",
        "--f", "expmix:1,900,0,900", "--n-paths", "500", "--seed", "1",
    ]);
    assert_eq!(exit_code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("non-finite"));
}

#[test]
fn ci_mode_requires_an_explicit_seed() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("out.csv");
    let simulate = [
        "simulate", "--process", "brownian", "--horizon", "1", "--cells", "2",
        "--n-paths", "4", "--out", csv.to_str().unwrap(),
    ];
    let mtg = [
        "mtg-test", "--process", "brownian", "--mode", "additive", "--f", "poly:0,1",
        "--n-paths", "100",
    ];

    for args in [&simulate[..], &mtg[..]] {
        let out = bin().env("CI", "1").args(args).output().unwrap();
        assert_eq!(exit_code(&out), 2, "CI run without --seed must fail: {args:?}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("--seed"));

        let out = bin().env("CI", "1").args(args).args(["--seed", "1"]).output().unwrap();
        assert_eq!(exit_code(&out), 0, "CI run with --seed must pass: {args:?}");

        // Outside CI the seed defaults to 0.
        let out = bin().args(args).output().unwrap();
        assert_eq!(exit_code(&out), 0);
        let report: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report["config"]["seed"], 0);
    }
}
