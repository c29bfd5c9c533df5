use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conformal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn eval_prints_seventeen_digits() {
    let o = run(&["eval", "--fn", "mu", "--r", "0.5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "2.0094593770052849");
    let v = json(&["eval", "--fn", "K", "--r", "0", "--format", "json"]);
    assert_eq!(v["value"].as_f64().unwrap(), std::f64::consts::FRAC_PI_2);
}

#[test]
fn domain_errors_exit_with_two() {
    for args in [
        &["eval", "--fn", "mu", "--r", "1.5"][..],
        &["eval", "--fn", "lambda", "--K", "0.5"],
        &["eval", "--fn", "mu"],
        &["invert", "--fn", "mu", "--y", "-1"],
        &["table", "--fn", "mu", "--var", "r", "--from", "0.5", "--to", "1", "--step", "0.25"],
        &["bounds", "NoSuchBound"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(run(&["eval", "--fn", "nosuch"]).status.code(), Some(2));
}

#[test]
fn invert_round_trips_through_eval() {
    let v = json(&["invert", "--fn", "mu", "--y", "3", "--format", "json"]);
    let r = v["value"].as_f64().unwrap();
    let back = json(&["eval", "--fn", "mu", "--r", &r.to_string(), "--format", "json"]);
    assert!((back["value"].as_f64().unwrap() - 3.0).abs() < 1e-12);
    let rc = v["complement"].as_f64().unwrap();
    assert!((r * r + rc * rc - 1.0).abs() < 1e-15);
}

#[test]
fn table_matches_landen_closed_form() {
    let o = run(&[
        "table", "--fn", "phiK", "--K", "2", "--var", "r", "--from", "0.1", "--to", "0.9", "--step", "0.2", "--format",
        "csv",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,phiK,error"));
    let mut rows = 0;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let (r, v): (f64, f64) = (f[0].parse().unwrap(), f[1].parse().unwrap());
        assert!((v - 2.0 * r.sqrt() / (1.0 + r)).abs() < 1e-15);
        assert!(f[2].is_empty());
        rows += 1;
    }
    assert_eq!(rows, 5);
}

#[test]
fn residuals_report_is_deterministic_and_fails_honestly() {
    let first = run(&["residuals", "--suite", "all"]);
    let second = run(&["residuals", "--suite", "all"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    let text = v.to_string();
    assert!(text.contains("PhiId4"));

    let ok = run(&["residuals", "--case", "Landen", "--case", "LJ3"]);
    assert!(ok.status.success(), "{}", String::from_utf8_lossy(&ok.stderr));
    let bad_grid = run(&["residuals", "--case", "Landen", "--grid", "0.5:1.5:0.5"]);
    assert_eq!(bad_grid.status.code(), Some(2));
}

#[test]
fn bounds_and_experiments() {
    let o = run(&["bounds", "GehringD2", "--K", "1"]);
    let d: f64 = stdout(&o).trim().parse().unwrap();
    assert!((d - std::f64::consts::PI.exp()).abs() < 1e-12);
    let v = json(&["experiment", "newton-monotone", "--y", "2", "--steps", "30"]);
    assert!(v.to_string().contains("findings"));
}

#[test]
fn generate_then_check_curves() {
    let dir = tempfile::tempdir().unwrap();
    let polygon = dir.path().join("polygon.csv");
    let koch = dir.path().join("koch.csv");
    let p = polygon.to_str().unwrap();
    let k = koch.to_str().unwrap();
    assert!(run(&["geom", "generate", "--polygon", "400", "--radius", "1", "--out", p]).status.success());
    assert!(run(&["geom", "generate", "--koch", "--level", "5", "--angle", "60", "--out", k]).status.success());
    assert_eq!(fs::read_to_string(&polygon).unwrap().lines().count(), 401);

    let a = json(&["geom", "check", "--in", p, "--property", "ahlfors"]);
    assert!((a["value"].as_f64().unwrap() - 1.0).abs() < 1e-3, "{a}");
    let d = json(&["geom", "check", "--in", p, "--property", "absolute-ratio", "--p1", "0,0", "--p2", "0.5,0"]);
    assert!((d["value"].as_f64().unwrap() - 3f64.ln()).abs() < 1e-2, "{d}");
    let b = json(&["geom", "check", "--in", k, "--property", "boxdim"]);
    assert!((b["value"].as_f64().unwrap() - 4f64.ln() / 3f64.ln()).abs() < 0.1, "{b}");

    let again = dir.path().join("again.csv");
    run(&["geom", "generate", "--koch", "--level", "5", "--angle", "60", "--out", again.to_str().unwrap()]);
    assert_eq!(fs::read(&koch).unwrap(), fs::read(&again).unwrap());
}

#[test]
fn malformed_curve_reports_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    fs::write(&path, "x,y\n0,0\n1,0\nfoo,1\n").unwrap();
    let o = run(&["geom", "check", "--in", path.to_str().unwrap(), "--property", "ahlfors"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}
