//! Process-level contract of the binary: flags, exit codes and output formats.

use std::io::Write as _;
use std::process::{Command, Output};

use rigiditylab::complex::parse_complex;
use rigiditylab::fixtures::{bundled, BUNDLED};
use rigiditylab::report::{parse_csv, ReportDocument};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rigiditylab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_json(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".json").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn theta_value_and_domain_error() {
    let o = run(&["theta", "--kind", "t3", "--v", "0", "--tau", "i"]);
    assert_eq!(o.status.code(), Some(0));
    let value: f64 = stdout(&o).trim().parse().unwrap();
    assert!((value - 1.086434811213308).abs() < 1e-12);

    let o = run(&["theta", "--kind", "t", "--v", "0.3", "--tau", "-1i"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("tau not in upper half-plane"));

    let o = run(&["theta", "--kind", "t", "--v", "zz", "--tau", "i"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn theta_is_odd_in_v() {
    let value = |v: &str| parse_complex(stdout(&run(&["theta", "--kind", "t", "--v", v, "--tau", "0.1+1.1i"])).trim()).unwrap();
    let (a, b) = (value("0.2+0.1i"), value("-0.2-0.1i"));
    assert!((a + b).norm() < 1e-13 * a.norm());
}

#[test]
fn verify_suites_pass_and_are_deterministic() {
    for suite in ["translations", "modular", "jacobi", "chseries"] {
        let args = ["verify", "--suite", suite, "--samples", "40", "--seed", "5", "--tol", "1e-9"];
        let a = run(&args);
        assert_eq!(a.status.code(), Some(0), "{suite}: {}", stdout(&a));
        let b = bin().args(args).env("RIGIDITYLAB_THREADS", "1").output().unwrap();
        assert_eq!(a.stdout, b.stdout, "{suite} differs across thread counts");
    }
}

#[test]
fn verify_fails_at_impossible_tolerance_and_rejects_unknown_suite() {
    let o = run(&["verify", "--suite", "jacobi", "--samples", "20", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdict=fail"));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn rigidity_exit_codes() {
    for name in ["s2", "s4", "s6", "s2xs2"] {
        for lambda in ["1", "2", "3"] {
            let o = run(&["rigidity", "--fixture", name, "--lambda", lambda, "--K", "4"]);
            assert_eq!(o.status.code(), Some(0), "{name} lambda={lambda}");
        }
    }
    assert_eq!(run(&["rigidity", "--fixture", "onepoint", "--K", "2"]).status.code(), Some(1));
    assert_eq!(run(&["rigidity", "--fixture", "anomalous", "--K", "4"]).status.code(), Some(1));
}

#[test]
fn rigidity_json_round_trips() {
    let o = run(&["rigidity", "--fixture", "s2xs2", "--lambda", "1", "--K", "4"]);
    let text = stdout(&o);
    let doc = ReportDocument::from_json(&text).unwrap();
    assert_eq!(doc.order, 4);
    assert_eq!(doc.orders.len(), 5);
    assert!(doc.all_constant());
    assert_eq!(doc.to_json() + "\n", text);
    assert!(doc.anomaly.rigid_condition_met);
}

#[test]
fn rigidity_csv_round_trips() {
    let o = run(&["rigidity", "--fixture", "onepoint", "--K", "2", "--format", "csv"]);
    let text = stdout(&o);
    let rows = parse_csv(&text).unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0].verdict, "non-laurent");
    let json = run(&["rigidity", "--fixture", "onepoint", "--K", "2"]);
    let doc = ReportDocument::from_json(&stdout(&json)).unwrap();
    assert_eq!(doc.csv_rows(), rows);
}

#[test]
fn fixture_from_a_file() {
    let f = temp_json(
        r#"{"name": "cp1", "d": 1, "l": 0, "components": [
            {"tangent_weights": [2]}, {"sign": 1, "tangent_weights": [-2]}]}"#,
    );
    let path = f.path().to_str().unwrap();
    let o = run(&["rigidity", "--fixture", path, "--K", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn broken_fixtures_exit_3() {
    let cases = [
        "{not json",
        r#"{"name": "x", "d": 1, "l": 0, "components": [{"tangent_weights": [0]}]}"#,
        r#"{"name": "x", "d": 2, "l": 0, "components": [{"tangent_weights": [1]}]}"#,
        r#"{"name": "x", "d": 1, "l": 0, "components": [{"sign": 2, "tangent_weights": [1]}]}"#,
        r#"{"name": "x", "d": 1, "l": 0, "extra": 1, "components": []}"#,
        r#"{"name": "", "d": 1, "l": 0, "components": []}"#,
    ];
    for text in cases {
        let f = temp_json(text);
        let path = f.path().to_str().unwrap();
        for cmd in ["rigidity", "qexpand"] {
            let o = run(&[cmd, "--fixture", path]);
            assert_eq!(o.status.code(), Some(3), "{cmd} {text}: {}", stderr(&o));
            assert!(stderr(&o).starts_with("error:"));
        }
    }
    assert_eq!(run(&["rigidity", "--fixture", "/no/such/file.json"]).status.code(), Some(3));
}

#[test]
fn qexpand_text_and_json() {
    let o = run(&["qexpand", "--fixture", "onepoint", "--lambda", "2", "--K", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0], "k=0: (-2i*z^2-8i*z-2i)/(-z^2+1)");
    assert_eq!(lines[1], "k=1: 0");

    let o = run(&["qexpand", "--fixture", "s4", "--K", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["K"], 3);
    assert_eq!(v["coefficients"].as_array().unwrap().len(), 4);
    for c in v["coefficients"].as_array().unwrap() {
        assert_eq!(c["text"], "0");
    }
}

#[test]
fn qexpand_empty_fixture_is_zero() {
    let f = temp_json(r#"{"name": "empty", "d": 1, "l": 0, "components": []}"#);
    let o = run(&["qexpand", "--fixture", f.path().to_str().unwrap(), "--K", "1"]);
    assert_eq!(stdout(&o), "k=0: 0\nk=1: 0\n");
}

#[test]
fn modularity_flags_anomaly_but_passes_with_factors() {
    let o = run(&["modularity", "--fixture", "anomalous", "--g", "S"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().contains("anomaly=flagged"));
    assert!(text.contains("t,tau,lambda,residual,period_r1,period_r2"));
    // 5x5 grid for each of three lambdas, plus header, column names, footer.
    assert_eq!(text.lines().count(), 75 + 3);

    let o = run(&["modularity", "--fixture", "s4", "--g", "T", "--lambda", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().contains("anomaly=none"));
    assert!(text.contains(",skipped,"), "t = 0.5 lies on the weight-2 pole lattice");
}

#[test]
fn modularity_fails_at_impossible_tolerance() {
    let o = run(&["modularity", "--fixture", "s2xs2", "--g", "S", "--grid", "2x2", "--tol", "1e-40"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).trim_end().ends_with("verdict=fail"));
}

#[test]
fn thread_variable_is_validated() {
    let o = bin().args(["verify", "--suite", "jacobi", "--samples", "3"]).env("RIGIDITYLAB_THREADS", "0").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn every_bundled_fixture_loads() {
    for (name, _) in BUNDLED {
        let doc = bundled(name).unwrap();
        assert_eq!(doc.name, name);
        doc.to_fixture().unwrap();
    }
}
