//! End-to-end tests of the `clausen` binary: output, exit codes and the
//! JSON report.

use clausen::verify::Status;
use clausen_cli::report::{Report, Summary};
use std::process::{Command, Output};

fn clausen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clausen")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn value_of(o: &Output) -> f64 {
    stdout(o).split_whitespace().nth(2).expect("value column").parse().expect("numeric value")
}

#[test]
fn eval_catalan_by_bbp_sum() {
    let o = clausen(&["eval", "catalan", "--method", "eq2.35"]);
    assert_eq!(o.status.code(), Some(0));
    assert!((value_of(&o) - 0.915_965_594_177_219).abs() < 1e-12);
}

#[test]
fn eval_cl2_at_zero() {
    let o = clausen(&["eval", "cl2", "--theta", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value_of(&o), 0.0);
}

#[test]
fn eval_i7_both_methods() {
    for m in ["clausen", "quadrature"] {
        let o = clausen(&["eval", "i7", "--method", m]);
        assert_eq!(o.status.code(), Some(0), "{m}");
        assert!((value_of(&o) - 1.151_925_470_544_491).abs() < 1e-9, "{m}");
    }
}

#[test]
fn eval_accepts_negative_arguments() {
    let o = clausen(&["eval", "cl2", "--theta", "-1.5"]);
    assert_eq!(o.status.code(), Some(0));
    let p = clausen(&["eval", "cl2", "--theta", "1.5"]);
    assert!((value_of(&o) + value_of(&p)).abs() < 1e-15);
}

#[test]
fn eval_json_output_parses() {
    let o = clausen(&["eval", "li3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["target"], "li3");
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
}

#[test]
fn eval_usage_errors_exit_2() {
    for args in [
        vec!["eval", "nope"],
        vec!["eval", "cl2"],
        vec!["eval", "cl2", "--theta", "abc"],
        vec!["eval", "catalan", "--method", "bogus"],
        vec!["eval", "cl2", "--theta", "1", "--tol", "-1"],
        vec!["eval", "cln", "--n", "0", "--theta", "1"],
        vec![],
    ] {
        assert_eq!(clausen(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn eval_domain_errors_exit_1() {
    assert_eq!(clausen(&["eval", "trigamma", "--x", "-2"]).status.code(), Some(1));
    assert_eq!(clausen(&["eval", "iab", "--a", "1", "--b", "1.5"]).status.code(), Some(1));
}

#[test]
fn max_terms_budget_aborts() {
    let o = clausen(&["eval", "l7", "--method", "series", "--max-terms", "10"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--max-terms"));
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(clausen(&["--help"]).status.code(), Some(0));
    assert_eq!(clausen(&["--version"]).status.code(), Some(0));
}

#[test]
fn verify_sine_json_round_trips() {
    let o = clausen(&["verify", "--tag", "sine", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let report = Report::from_json(&text).unwrap();
    assert_eq!(report.schema_version, "1");
    assert!(report.records.iter().all(|r| r.status == Status::Pass));
    assert_eq!(report.summary, Summary::tally(&report.records));
    assert_eq!(Report::from_json(&report.to_json()).unwrap(), report);
}

#[test]
fn verify_all_text_table() {
    let o = clausen(&["verify", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert!(lines[0].starts_with("id "));
    assert!(lines.len() >= 47);
    let conj = lines.iter().find(|l| l.starts_with("conj-L7 ")).unwrap();
    assert!(conj.contains("supports-conjecture"));
    // Fixed columns: every record row has the same width up to the ms field.
    let widths: Vec<_> = lines[1..lines.len() - 1].iter().map(|l| l.len()).collect();
    assert!(widths.iter().all(|&w| w == widths[0]), "{widths:?}");
    assert!(lines.last().unwrap().starts_with("total "));
}

#[test]
fn verify_single_check_and_tolerance() {
    let o = clausen(&["verify", "--check", "csc7", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.records.len(), 1);
    assert_eq!(r.records[0].rhs, Some(8.0));

    // The conjecture reports an error under an unreachable tolerance, which
    // does not affect the exit code.
    let o = clausen(&["verify", "--check", "conj-L7", "--tol", "1e-30", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.records[0].status, Status::Error);

    // A proved identity held to an unreachable tolerance fails.
    let o = clausen(&["verify", "--check", "P1", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_tol_scale_is_monotone() {
    let run = |s: &str| Report::from_json(&stdout(&clausen(&["verify", "--tol-scale", s, "--format", "json"]))).unwrap();
    let tight = run("1e-4");
    let loose = run("10");
    for (t, l) in tight.records.iter().zip(&loose.records) {
        assert_eq!(t.id, l.id);
        if t.status == Status::Pass {
            assert_eq!(l.status, Status::Pass, "{}", t.id);
        }
    }
}

#[test]
fn verify_usage_errors_exit_2() {
    for args in [
        vec!["verify", "--check", "no-such-id"],
        vec!["verify", "--tag", "bogus"],
        vec!["verify", "--all", "--tag", "sine"],
        vec!["verify", "--tol", "1e-3"],
        vec!["verify", "--tol-scale", "0"],
        vec!["verify", "--format", "xml"],
    ] {
        assert_eq!(clausen(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn digits_of_pi_and_friends() {
    let o = clausen(&["digits", "--formula", "pi-degree1", "--position", "0", "--count", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "243F6A");
    let o = clausen(&["digits", "--formula", "eq2.35-sum", "--position", "0", "--count", "8"]);
    assert_eq!(stdout(&o).trim(), "CF0B8AFF");
    let o = clausen(&["digits", "--formula", "zero", "--count", "6"]);
    assert_eq!(stdout(&o).trim(), "000000");
}

#[test]
fn digits_failures_exit_1() {
    assert_eq!(clausen(&["digits", "--formula", "nope"]).status.code(), Some(1));
    assert_eq!(clausen(&["digits", "--formula", "pi-degree1", "--count", "40"]).status.code(), Some(1));
    // (8j+k)³ overflows 64 bits far out.
    let o = clausen(&["digits", "--formula", "eq2.37-sum", "--position", "2000000"]);
    assert_eq!(o.status.code(), Some(1));
}
