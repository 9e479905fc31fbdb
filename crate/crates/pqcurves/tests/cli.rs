//! End-to-end tests of the binary: exit-code contract, output formats,
//! and determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pqcurves"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn curve_command_reports_the_7_torsion_curve() {
    let out = run(&["curve", "--n", "7", "--s", "2", "--t", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("-2^7 * 13"), "{text}");
    assert!(text.contains("conductor:      26"), "{text}");
    assert!(text.contains("order of (0,0) = 7"), "{text}");
}

#[test]
fn curve_command_rejects_singular_parameters_with_exit_2() {
    let out = run(&["curve", "--n", "4", "--s", "0", "--t", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("singular: s=0"), "{err}");
}

#[test]
fn curve_command_reports_additive_reduction_for_order_8() {
    let out = run(&["curve", "--n", "8", "--s", "1", "--t", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("p=2") && text.contains("additive"), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    // invalid torsion order
    let out = run(&["curve", "--n", "11", "--s", "1", "--t", "1"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown equation id (clap enum validation)
    let out = run(&["dioph", "--eq", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    // gcd violation
    let out = run(&["curve", "--n", "4", "--s", "2", "--t", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_empty_orders_exit_0() {
    let out = run(&["enumerate", "--n", "10", "--bound", "40"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 curve(s)"));
}

#[test]
fn verify_exit_codes_follow_the_contract() {
    // order 7 at bound 50: one curve, fully matched -> exit 0
    let out = run(&["verify", "--n", "7", "--bound", "50"]);
    assert_eq!(out.status.code(), Some(0));
    // order 12 at small bound: empty -> exit 0
    let out = run(&["verify", "--n", "12", "--bound", "40"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 curves (expected 0)"));
    // order 8 finds curves beyond the reference table -> exit 1
    let out = run(&["verify", "--n", "8", "--bound", "50"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("VIOLATION"));
}

#[test]
fn verify_discrepancy_flag_prints_warnings() {
    let out = run(&[
        "verify",
        "--n",
        "9",
        "--bound",
        "30",
        "--report-discrepancies",
    ]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("computed conductor 2^4 * 3"), "{err}");
    assert!(err.contains("computed conductor 2 * 3^3"), "{err}");
    assert!(err.contains("prime support agrees, exponents differ"), "{err}");
}

#[test]
fn csv_output_has_the_documented_columns() {
    let out = run(&["enumerate", "--n", "7", "--bound", "30", "--format", "csv"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "N,s,t,a1,a2,a3,a4,a6,disc_min,conductor,szpiro_ratio,torsion"
    );
    let row = lines.next().unwrap();
    assert!(row.starts_with("7,"), "{row}");
    assert!(row.contains("-1664"), "{row}");
    assert!(row.ends_with(",7"), "{row}");
}

#[test]
fn json_lines_are_schema_versioned_and_parse() {
    let out = run(&[
        "enumerate",
        "--n",
        "6",
        "--bound",
        "20",
        "--format",
        "json-lines",
    ]);
    let text = stdout(&out);
    assert!(!text.trim().is_empty());
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON");
        assert_eq!(v["schema_version"], "1");
        assert_eq!(v["command"], "enumerate");
        // big integers travel as decimal strings
        assert!(v["record"]["disc_min"]["value"].is_string());
        let n = v["record"]["n"].as_u64().unwrap();
        assert_eq!(n, 6);
    }
}

#[test]
fn identical_inputs_give_byte_identical_output() {
    let args = ["enumerate", "--n", "5", "--bound", "40", "--format", "json-lines"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let args = ["verify", "--n", "6", "--bound", "60", "--format", "json-lines"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn dioph_searches_from_the_command_line() {
    let out = run(&["dioph", "--eq", "lemma22", "--pbound", "200", "--mbound", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("solutions (0)"));

    let out = run(&["dioph", "--eq", "pell125", "--sign", "-4", "--count", "2"]);
    let text = stdout(&out);
    assert!(text.contains("(11, 1)"));
    assert!(text.contains("(1364, 122)"));

    let out = run(&["dioph", "--eq", "cor25"]);
    let text = stdout(&out);
    assert!(text.contains("rejected: (-26, 31, 2)"), "{text}");
    assert!(text.contains("rejected: (18, 5, 3)"), "{text}");
}

#[test]
fn szpiro_command_checks_the_bound() {
    let out = run(&["szpiro", "--n", "7", "--bound", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("exponent 3"), "{text}");
    assert!(text.contains("all records: true"), "{text}");
    // an exponent that is too small fails and exits 1
    let out = run(&["szpiro", "--n", "7", "--bound", "50", "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn jobs_flag_does_not_change_results() {
    let seq = run(&["enumerate", "--n", "6", "--bound", "50", "--format", "csv"]);
    let par = run(&[
        "enumerate", "--n", "6", "--bound", "50", "--format", "csv", "--jobs", "4",
    ]);
    assert_eq!(seq.stdout, par.stdout);
}
