use std::process::{Command, Output};

fn lqlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lqlab"))
        .arg("--quiet")
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_single_prime_passes() {
    let o = lqlab(&["verify", "--q", "5", "--limit", "10000"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("# result=pass"));
    assert!(!text.contains("mismatch,"));
}

#[test]
fn verify_all_primes_up_to_bound() {
    let o = lqlab(&["--format", "json", "verify", "--all-q", "60", "--limit", "2000"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let qs: std::collections::BTreeSet<u64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|r| r["q"].as_u64())
        .collect();
    assert_eq!(
        qs.into_iter().collect::<Vec<_>>(),
        vec![3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    );
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(lqlab(&["verify", "--q", "4"]).status.code(), Some(2));
    assert_eq!(lqlab(&["verify"]).status.code(), Some(2));
    assert_eq!(lqlab(&["verify", "--q", "5", "--all-q", "9"]).status.code(), Some(2));
    assert_eq!(lqlab(&["near-curve", "--x", "1000"]).status.code(), Some(2));
    assert_eq!(lqlab(&["constants", "--q", "banana"]).status.code(), Some(2));
}

#[test]
fn resource_limits_exit_three() {
    assert_eq!(lqlab(&["trace", "--q", "7", "--max", "1e15"]).status.code(), Some(3));
    assert_eq!(
        lqlab(&["constants", "--q", "7", "--p-cutoff", "1e13"]).status.code(),
        Some(3)
    );
    assert_eq!(
        lqlab(&["constants", "--q", "7", "--tolerance", "1e-12"]).status.code(),
        Some(3)
    );
}

#[test]
fn constants_for_seven() {
    let o = lqlab(&["--format", "json", "constants", "--q", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["metadata"]["branch"], "PM1_MOD8/PM7_MOD24");
    let get = |name: &str| {
        v["rows"]
            .as_array()
            .unwrap()
            .iter()
            .find(|r| r["constant"] == name)
            .unwrap()["value"]
            .as_f64()
            .unwrap()
    };
    assert!((get("leading") - 0.454).abs() < 5e-4);
    assert!((get("bracket") - 0.784).abs() < 5e-4);
}

#[test]
fn empty_short_interval_is_zero() {
    let o = lqlab(&["short-interval", "--x", "1e6", "--y", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let last = stdout(&o).lines().last().unwrap().to_string();
    let fields: Vec<&str> = last.split(',').collect();
    assert_eq!(fields[0], "1000000");
    assert_eq!(fields[3], "0");
}

#[test]
fn near_curve_scan_has_windows_and_detail() {
    let o = lqlab(&["--format", "json", "near-curve", "--x", "1e6", "--y", "100"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!v["rows"].as_array().unwrap().is_empty());
    assert_eq!(v["metadata"]["windows_cover_scan"], true);
    assert!(v["detail"]["decomposition"]["windows"].is_array());
}

#[test]
fn near_curve_single_curve() {
    let o = lqlab(&[
        "near-curve",
        "--scale",
        "1000",
        "--exponent",
        "5/2",
        "--n",
        "50",
        "--delta",
        "0.01",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("scale,exponent,n,delta,count"));
}

#[test]
fn rh_diagnostic_rows() {
    let o = lqlab(&["rh-diagnostic", "--q", "5", "--max", "1e5"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = stdout(&o).lines().filter(|l| !l.starts_with('#')).count();
    assert!(rows > 2);
    assert_eq!(
        lqlab(&["rh-diagnostic", "--q", "7", "--max", "1e5"]).status.code(),
        Some(2)
    );
}

#[test]
fn trace_long_format() {
    let o = lqlab(&[
        "trace",
        "--q",
        "13",
        "--max",
        "1e5",
        "--alpha",
        "0.5,0.25",
        "--r-cutoff",
        "1e6",
        "--tolerance",
        "0.5",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let data: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).skip(1).collect();
    assert_eq!(data.len() % 2, 0);
    assert!(text.contains("# fitted_exponent="));
}

#[test]
fn output_is_deterministic_without_timestamp() {
    let args = [
        "--no-timestamp",
        "--threads",
        "1",
        "verify",
        "--q",
        "7",
        "--limit",
        "3000",
    ];
    let a = stdout(&lqlab(&args));
    let b = stdout(&lqlab(&args));
    assert_eq!(a, b);
    assert!(!a.contains("unix_time"));
}

#[test]
fn writes_to_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = lqlab(&[
        "--format",
        "json",
        "-o",
        path.to_str().unwrap(),
        "short-interval",
        "--x",
        "1e4",
        "--y",
        "50",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rows"][0]["x"], 10000);
}
