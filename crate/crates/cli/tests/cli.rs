use std::fs;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn theta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_theta-loci"))
        .args(args)
        .env_remove("THETA_LOCI_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn generic_run_exits_zero() {
    let o = theta(&["run", "--case", "c5w25", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["status"], "PASS");
    assert_eq!(report["ideals"][0]["hilbert_numerator"], "1 - 5t^2 + 5t^3 - t^5");
    assert!(report.get("timings").is_none());
}

#[test]
fn output_is_byte_identical() {
    let a = theta(&["run", "--case", "w39", "--seed", "1,2"]);
    let b = theta(&["run", "--case", "w39", "--seed", "1,2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let reports: Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(reports.as_array().map(Vec::len), Some(2));
}

#[test]
fn degenerate_section_is_nongeneric() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("section.json");
    let section = json!({
        "prime": 101,
        "case": "c5w25",
        "terms": [{ "indices": [1, 1, 2], "coeff": 1 }]
    });
    fs::write(&path, section.to_string()).unwrap();
    let o = theta(&["run", "--section", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}{}", stdout(&o), stderr(&o));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["status"], "NONGENERIC");
}

#[test]
fn malformed_section_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("section.json");
    fs::write(&path, r#"{"prime": 101, "case": "c5w25", "terms": [{"indices": [1, 1, 2]}]}"#).unwrap();
    let o = theta(&["run", "--section", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("coeff"), "{}", stderr(&o));

    fs::write(&path, r#"{"prime": 101, "case": "c5w25", "terms": [{"indices": [1, 1, 2], "coeff": 500}]}"#).unwrap();
    let o = theta(&["run", "--section", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("terms[0].coeff"), "{}", stderr(&o));
}

#[test]
fn out_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let o = theta(&["example", "--name", "all", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = fs::read_to_string(&path).unwrap();
    for name in ["nodal", "triangle", "pentagon", "nonreduced", "cuspidal"] {
        assert!(text.contains(&format!("case {name} over F_101: PASS")), "{text}");
    }
}

#[test]
fn groebner_of_the_twisted_cubic() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ideal.json");
    let input = json!({
        "prime": 101,
        "variables": ["x", "y", "z", "w"],
        "generators": ["x*z - y^2", "y*w - z^2", "x*w - y*z"]
    });
    fs::write(&path, input.to_string()).unwrap();
    let o = theta(&["gb", "--file", path.to_str().unwrap(), "--hilbert"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(out["basis"].as_array().map(Vec::len), Some(3));
    assert_eq!(out["degree"], 3);
    assert_eq!(out["dim"], 2);
}

#[test]
fn bad_generator_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ideal.json");
    let input = json!({ "prime": 101, "variables": ["x"], "generators": ["x^2", "x + q"] });
    fs::write(&path, input.to_string()).unwrap();
    let o = theta(&["gb", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("generators[1]"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_one() {
    let o = theta(&["run", "--case", "c5w25", "--section", "x.json"]);
    assert_eq!(o.status.code(), Some(1));
    let o = theta(&["run", "--case", "c9"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn small_commands() {
    let o = theta(&["verlinde", "--g", "2", "--k", "2"]);
    assert_eq!(stdout(&o).trim(), "10");
    let o = theta(&["schur-dim", "--lambda", "2,1", "--n", "3"]);
    assert!(stdout(&o).contains('8'), "{}", stdout(&o));
    let o = theta(&["vinberg", "table"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn bad_thread_count_is_an_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_theta-loci"))
        .args(["run", "--case", "c5w25", "--seed", "1"])
        .env("THETA_LOCI_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("THETA_LOCI_THREADS"));
}
