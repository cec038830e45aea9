use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bargmann"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

/// Last column pair `(re, im)` of each CSV data row.
fn csv_values(text: &str) -> Vec<(f64, f64)> {
    text.lines()
        .skip(1)
        .map(|l| {
            let f: Vec<f64> = l.split(',').map(|v| v.parse().unwrap()).collect();
            (f[f.len() - 2], f[f.len() - 1])
        })
        .collect()
}

const H1: &str = r#"{"dim":1,"cutoff":1,"coeffs":[{"alpha":[1],"re":1,"im":0}]}"#;
const GAUSS_2I: &str = r#"{"type":"gaussian","dim":1,"a":2}"#;

#[test]
fn bargmann_of_h1_is_z() {
    let o = run(&["transform", "bargmann", "--input", H1, "--points", "0,0;1,0.5;2,0"]);
    assert!(o.status.success());
    let v = csv_values(&stdout(&o));
    assert_eq!(v, vec![(0.0, 0.0), (1.0, 0.5), (2.0, 0.0)]);
}

#[test]
fn stft_of_window_at_origin() {
    let spec = r#"{"type":"hermite_combo","dim":1,"terms":[{"alpha":[0],"re":1,"im":0}]}"#;
    let o = run(&["transform", "stft", "--input", spec, "--points", "0,0", "--cutoff", "4"]);
    let (re, im) = csv_values(&stdout(&o))[0];
    assert!((re - 0.3989422804014327).abs() < 1e-15 && im == 0.0);
}

#[test]
fn half_turn_then_synthesis_reflects_h3() {
    let dir = tempfile::tempdir().unwrap();
    let rotated = dir.path().join("r.json");
    let spec = r#"{"type":"hermite_combo","dim":1,"terms":[{"alpha":[3],"re":1,"im":0}]}"#;
    let o = run(&["transform", "fracft", "--r", "2", "--input", spec, "--cutoff", "3", "--output", rotated.to_str().unwrap()]);
    assert!(o.status.success());
    let o = run(&["transform", "synthesize", "--input", rotated.to_str().unwrap(), "--points", "1"]);
    let (re, _) = csv_values(&stdout(&o))[0];
    // h_3(1) = (8 - 12)/sqrt(48 sqrt(pi)) · e^{-1/2}
    let h3 = -4.0 / (48.0 * std::f64::consts::PI.sqrt()).sqrt() * (-0.5f64).exp();
    assert!((re + h3).abs() < 1e-15, "{re}");
}

#[test]
fn analyze_output_round_trips_through_transform() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e.json");
    let spec = r#"{"type":"gaussian","dim":1,"a":1.3,"l":[[0.2,0.1]]}"#;
    assert!(run(&["analyze", "--input", spec, "--cutoff", "20", "--output", path.to_str().unwrap()]).status.success());
    let direct = run(&["transform", "bargmann", "--input", spec, "--cutoff", "20", "--points", "0.5,0.2;-1,1"]);
    let reread = run(&["transform", "bargmann", "--input", path.to_str().unwrap(), "--points", "0.5,0.2;-1,1"]);
    assert_eq!(stdout(&direct), stdout(&reread));
}

#[test]
fn identical_jobs_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let outputs: Vec<Vec<u8>> = (0..2)
        .map(|i| {
            let p = dir.path().join(format!("v{i}.json"));
            let o = run(&["verify", "fracft", "--seed", "9", "--output", p.to_str().unwrap()]);
            assert!(o.status.success());
            fs::read(&p).unwrap()
        })
        .collect();
    assert_eq!(outputs[0], outputs[1]);
    let a = stdout(&run(&["classify", "--input", GAUSS_2I]));
    let b = stdout(&run(&["classify", "--input", GAUSS_2I]));
    assert_eq!(a, b);
}

#[test]
fn classify_reports_gaussian_criterion_and_exits_zero() {
    let o = run(&["classify", "--input", GAUSS_2I]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gaussian"]["member"], false);
    let sigma = v["verdicts"].as_array().unwrap().iter().find(|x| x["space"] == "Sigma").unwrap();
    assert_eq!(sigma["verdict"], "non-member");
}

#[test]
fn verify_report_shape() {
    let o = run(&["verify", "reproducing"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "reproducing");
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["status"], "pass");
        assert!(c["worst_err"].as_f64().unwrap() <= c["tolerance"].as_f64().unwrap());
    }
}

#[test]
fn unknown_suite_lists_the_suites() {
    let o = run(&["verify", "everything"]);
    assert!(!o.status.success());
    let err = String::from_utf8(o.stderr).unwrap();
    for s in ["bridge", "reproducing", "weights", "norms", "equiv-lemma", "fracft", "classify"] {
        assert!(err.contains(s), "{err}");
    }
}

#[test]
fn malformed_spec_names_the_field() {
    let o = run(&["analyze", "--input", r#"{"type":"gaussian","dim":1,"a":[[1]],"l":["x"]}"#]);
    assert!(!o.status.success());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("gaussian.l"), "{err}");
    let o = run(&["analyze", "--input", r#"{"type":"hermite_combo","terms":[]}"#]);
    assert!(!o.status.success());
    assert!(String::from_utf8(o.stderr).unwrap().contains("hermite_combo.dim"));
}

#[test]
fn floats_carry_seventeen_significant_digits() {
    let o = run(&["norm", "--kind", "l2", "--input", H1]);
    let text = stdout(&o);
    let line = text.lines().find(|l| l.contains("\"value\"")).unwrap();
    let digits: String = line.split(':').nth(1).unwrap().trim().split('e').next().unwrap().replace(['.', '-'], "");
    assert_eq!(digits.len(), 17, "{line}");
}

#[test]
fn plotdata_writes_requested_views() {
    let dir = tempfile::tempdir().unwrap();
    let rule = r#"{"type":"coefficient_rule","rule":"stretched_exp","r":1,"s":0.5,"dim":1}"#;
    let o = run(&["plotdata", "--input", rule, "--cutoff", "12", "--output", dir.path().to_str().unwrap(), "--view", "decay"]);
    assert!(o.status.success());
    assert!(!Path::new(&dir.path().join("heatmap.csv")).exists());
    let text = fs::read_to_string(dir.path().join("decay.csv")).unwrap();
    // c = e^{-k}: the scatter is the line ln|c| = -feature
    for l in text.lines().skip(1) {
        let f: Vec<f64> = l.split(',').map(|v| v.parse().unwrap()).collect();
        assert!((f[2] + f[3]).abs() < 1e-12);
    }

    let h1 = dir.path().join("h1");
    let o = run(&["plotdata", "--input", H1, "--output", h1.to_str().unwrap(), "--view", "heatmap", "--grid", "-1:1:5,-1:1:5"]);
    assert!(o.status.success());
    let text = fs::read_to_string(h1.join("heatmap.csv")).unwrap();
    for l in text.lines().skip(1) {
        let f: Vec<f64> = l.split(',').map(|v| v.parse().unwrap()).collect();
        assert!((f[2] - f[0].hypot(f[1])).abs() < 1e-15);
    }
}
