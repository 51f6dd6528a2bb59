use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wiretwist")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = run(&full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn stiffness_defaults_give_circular_value() {
    let v = json(&["stiffness"]);
    let k = v["results"]["k_closed_form"].as_f64().unwrap();
    assert!((k - 6602.0).abs() <= 1.0, "{k}");
    assert_eq!(v["inputs"]["section"], "circular");
}

#[test]
fn stiffness_reference_wire_race() {
    let v = json(&["stiffness", "--rw-ratio", "3", "--L-ratio", "3.5"]);
    let r = &v["results"];
    assert!((r["k_numeric"].as_f64().unwrap() - 5046.0).abs() <= 1.0);
    assert!((r["k_engineering"].as_f64().unwrap() - 5089.0).abs() <= 1.0);
    assert_eq!(v["meta"]["quadrature"]["scheme"], "adaptive-simpson");
}

#[test]
fn absolute_dimensions_match_ratios() {
    let a = json(&["stiffness", "--rw-ratio", "3", "--L-ratio", "3.5"]);
    let b = json(&["stiffness", "--rw", "9.9", "--L", "11.55"]);
    let (ka, kb) = (a["results"]["k_numeric"].as_f64().unwrap(), b["results"]["k_numeric"].as_f64().unwrap());
    assert!((ka - kb).abs() < 1e-6 * ka);
}

#[test]
fn both_dimension_forms_warn() {
    let o = run(&["stiffness", "--rw-ratio", "3", "--L-ratio", "3.5", "--rw", "1", "--L", "2"]);
    assert!(o.status.success());
    assert!(!o.stderr.is_empty());
}

#[test]
fn invalid_geometry_exits_2() {
    let o = run(&["stiffness", "--rw-ratio", "3", "--L-ratio", "2.9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid geometry"));
    assert_eq!(run(&["stiffness", "--rw-ratio", "3"]).status.code(), Some(2));
    assert_eq!(run(&["stiffness", "--R", "-1"]).status.code(), Some(2));
}

#[test]
fn integral_command() {
    let v = json(&["integral", "--r", "1", "--rw-ratio", "3", "--L-ratio", "3.5"]);
    let s = v.to_string();
    assert!(s.contains("0.600254386"), "{s}");
}

#[test]
fn doe_default_csv() {
    let o = run(&["doe"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "rw_ratio,L_ratio,gamma_rad,x,I_over_r4");
    assert_eq!(lines.len(), 13);
    assert!(text.contains("3,3.5,0.785398163397,0.5,0.600254386"));
    assert!(!text.contains('\r'));
}

#[test]
fn doe_runs_are_byte_identical() {
    let args = ["doe", "--gammas-deg", "45,135,225,315"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let j = ["doe", "--format", "json"];
    assert_eq!(run(&j).stdout, run(&j).stdout);
}

#[test]
fn doe_json_and_csv_agree() {
    let csv_text = stdout(&run(&["doe"]));
    let v = json(&["doe"]);
    let rows = v["results"]["rows"].as_array().unwrap();
    let csv_values: Vec<f64> = csv_text.lines().skip(1).map(|l| l.rsplit(',').next().unwrap().parse().unwrap()).collect();
    assert_eq!(rows.len(), csv_values.len());
    for (row, c) in rows.iter().zip(csv_values) {
        assert_eq!(row["I_over_r4"].as_f64().unwrap(), c);
    }
}

#[test]
fn fit_from_file_and_output_flag() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("doe.csv");
    let p = path.to_str().unwrap();
    assert!(run(&["doe", "-o", p]).status.success());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("rw_ratio,"));
    let v = json(&["fit", "-i", p]);
    let c = v["results"]["c"].as_f64().unwrap();
    assert!((c - 0.358).abs() < 1e-3, "{c}");
    assert!(run(&["fit", "-i", dir.path().join("missing.csv").to_str().unwrap()]).status.code() != Some(0));
}

#[test]
fn torque_curve_outputs() {
    let v = json(&["torque-curve", "--rw-ratio", "3", "--L-ratio", "3.5", "--steps", "2"]);
    let s = v.to_string();
    assert!(s.contains("k_origin"), "{s}");
    let o = run(&["torque-curve", "--steps", "2", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 6);
    assert_eq!(run(&["torque-curve", "--alpha-max", "2"]).status.code(), Some(2));
}

#[test]
fn oracle_check_passes() {
    let o = run(&["oracle-check", "--grid", "200", "--rw-ratio", "3", "--L-ratio", "3.5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS"));
    let strict = run(&["oracle-check", "--grid", "16", "--threshold", "1e-9"]);
    assert_eq!(strict.status.code(), Some(4));
}
