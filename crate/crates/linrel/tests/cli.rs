//! Behavioral tests of the `linrel` binary: subcommand outputs, formats,
//! file emission, thread configuration, and the usage-error paths.

use std::process::Command;

fn linrel() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linrel"))
}

fn run(args: &[&str]) -> (Option<i32>, String, String) {
    let output = linrel().args(args).output().expect("spawn linrel");
    (
        output.status.code(),
        String::from_utf8(output.stdout).expect("stdout utf8"),
        String::from_utf8(output.stderr).expect("stderr utf8"),
    )
}

fn json(stdout: &str) -> serde_json::Value {
    serde_json::from_str(stdout).expect("json output")
}

/// The coefficient entries as (degree, value) pairs.
fn entries(report: &serde_json::Value) -> Vec<(u64, String)> {
    report["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["degree"].as_u64().unwrap(), e["value"].as_str().unwrap().to_string()))
        .collect()
}

#[test]
fn coeff_expands_small_products_exactly() {
    let (code, stdout, _) = run(&["coeff", "--family", "hermite", "--degrees", "1,1"]);
    assert_eq!(code, Some(0));
    let report = json(&stdout);
    assert_eq!(report["family"], "hermite");
    assert_eq!(entries(&report), vec![(2, "1".into()), (0, "2".into())]);

    let (code, stdout, _) = run(&[
        "coeff", "--family", "jacobi", "--alpha", "0", "--beta", "0", "--degrees", "1,1",
    ]);
    assert_eq!(code, Some(0));
    assert_eq!(
        entries(&json(&stdout)),
        vec![(2, "2/3".into()), (1, "0".into()), (0, "1/3".into())]
    );

    let (code, stdout, _) = run(&[
        "coeff", "--family", "gegenbauer", "--lambda", "1/2", "--degrees", "1,1,1",
    ]);
    assert_eq!(code, Some(0));
    assert_eq!(entries(&json(&stdout)), vec![(3, "2/5".into()), (1, "3/5".into())]);
}

#[test]
fn coeff_reports_parameters_as_exact_strings() {
    let (code, stdout, _) = run(&[
        "coeff", "--family", "laguerre", "--alpha", "-1/2", "--degrees", "2,2",
    ]);
    assert_eq!(code, Some(0));
    let report = json(&stdout);
    assert_eq!(report["params"]["alpha"], "-1/2");
    for (_, value) in entries(&report) {
        assert!(!value.contains('.'), "float leaked into {value}");
    }
}

#[test]
fn coeff_supports_csv_rows() {
    let (code, stdout, _) = run(&[
        "coeff", "--family", "hermite", "--degrees", "2,2", "--format", "csv",
    ]);
    assert_eq!(code, Some(0));
    let lines: Vec<&str> = stdout.trim_end().lines().collect();
    assert_eq!(lines[0], "degree,value");
    // H_2·H_2 expands over degrees 4, 2, 0.
    assert_eq!(lines.len(), 1 + 3);
}

#[test]
fn quad_cross_checks_exact_integrals() {
    let (code, stdout, _) = run(&["quad", "--family", "hermite", "--degrees", "2,1,1"]);
    assert_eq!(code, Some(0));
    let report = json(&stdout);
    assert_eq!(report["exact"], "8");
    assert_eq!(report["agree"], true);
    let numeric = report["numeric"].as_f64().unwrap();
    let h0 = report["h0"].as_f64().unwrap();
    assert!((numeric - 8.0 * h0).abs() <= 1e-9 * numeric.abs());

    let (code, stdout, _) = run(&[
        "quad",
        "--family",
        "scaled-laguerre",
        "--alpha",
        "0",
        "--scales",
        "2,3",
        "--degrees",
        "1,1,1",
    ]);
    assert_eq!(code, Some(0));
    let report = json(&stdout);
    assert_eq!(report["exact"], "-19");
    assert_eq!(report["scales"], serde_json::json!(["1", "2", "3"]));
    assert_eq!(report["agree"], true);
}

#[test]
fn quad_rejects_an_impossible_tolerance_with_exit_one() {
    // Demanding agreement far below what f64 can deliver must fail the
    // cross-check, not fake it.
    let (code, stdout, _) = run(&[
        "quad", "--family", "hermite", "--degrees", "4,4,4", "--rtol", "1e-18", "--atol", "0",
    ]);
    assert_eq!(code, Some(1));
    assert_eq!(json(&stdout)["agree"], false);
}

#[test]
fn verify_covers_every_suite_kind() {
    for suite_args in [
        vec!["--suite", "contiguous", "--family", "gegenbauer", "--lambda", "1/3"],
        vec!["--suite", "oracle", "--family", "scaled-laguerre", "--alpha", "0", "--scales", "1/2,5"],
        vec!["--suite", "quad", "--family", "jacobi", "--alpha", "1/2", "--beta", "1/3"],
        vec!["--suite", "genfun", "--family", "laguerre", "--alpha", "1/2"],
    ] {
        let mut args = vec!["verify"];
        args.extend(suite_args.iter());
        args.extend(["--max-degree", "3"]);
        let (code, stdout, stderr) = run(&args);
        assert_eq!(code, Some(0), "{args:?}: {stderr}");
        let report = json(&stdout);
        assert_eq!(report["failed"], 0, "{args:?}");
        assert!(report["passed"].as_u64().unwrap() > 0, "{args:?}");
    }
}

#[test]
fn genfun_suite_skips_degrees_beyond_the_series_budget() {
    let (code, stdout, _) = run(&[
        "verify", "--suite", "genfun", "--family", "hermite", "--max-degree", "8",
    ]);
    assert_eq!(code, Some(0));
    let report = json(&stdout);
    // Total degrees 0..=6 are checkable; 7 and 8 exceed the fixed budget.
    assert_eq!(report["passed"], 7);
    assert_eq!(report["skipped"], 2);
    assert_eq!(report["failed"], 0);
}

#[test]
fn genfun_suite_rejects_families_without_a_product_series() {
    let (code, _, stderr) = run(&[
        "verify", "--suite", "genfun", "--family", "gegenbauer", "--lambda", "1/3",
        "--max-degree", "3",
    ]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("hermite and laguerre"), "{stderr}");
}

#[test]
fn usage_errors_exit_two_before_any_verification_runs() {
    // Missing family parameter.
    let (code, _, stderr) = run(&["coeff", "--family", "jacobi", "--degrees", "1,1"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("--alpha"), "{stderr}");

    // Scaled products require the two extra argument scales.
    let (code, _, stderr) = run(&[
        "verify", "--suite", "contiguous", "--family", "scaled-laguerre", "--alpha", "0",
        "--max-degree", "2",
    ]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("--scales"), "{stderr}");

    // Scaled products are three-factor only.
    let (code, _, stderr) = run(&[
        "verify", "--suite", "contiguous", "--family", "scaled-laguerre", "--alpha", "0",
        "--scales", "2,3", "--factors", "4", "--max-degree", "2",
    ]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("three-factor"), "{stderr}");

    // Factor counts outside 2..=4 are rejected.
    let (code, _, stderr) = run(&[
        "verify", "--suite", "contiguous", "--family", "hermite", "--factors", "5",
        "--max-degree", "2",
    ]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("--factors"), "{stderr}");

    // Parameters must parse as exact rationals.
    let (code, _, _) = run(&[
        "coeff", "--family", "gegenbauer", "--lambda", "0.5", "--degrees", "1,1",
    ]);
    assert_eq!(code, Some(2));
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, stdout, _) = run(&[
        "verify",
        "--suite",
        "contiguous",
        "--family",
        "laguerre",
        "--alpha",
        "1/3",
        "--max-degree",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, Some(0));
    assert!(stdout.is_empty());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["passed"], 27);
}

#[test]
fn thread_count_does_not_change_the_report() {
    let args = [
        "verify", "--suite", "contiguous", "--family", "hermite", "--max-degree", "3",
        "--format", "csv",
    ];
    let single = linrel().args(args).env("LINREL_THREADS", "1").output().unwrap();
    let flagged = linrel().args(args).arg("--threads").arg("3").output().unwrap();
    let default = linrel().args(args).output().unwrap();
    assert_eq!(single.status.code(), Some(0));
    assert_eq!(single.stdout, flagged.stdout);
    assert_eq!(single.stdout, default.stdout);
}
