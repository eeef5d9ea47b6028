use std::process::{Command, Output};

fn denom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_denom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn passing_oracle_exits_zero() {
    let o = denom(&["check-oracle", "--disk", "4,1", "--no-timing"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("scenario oracle: PASS"));
    assert!(text.contains("[PASS] d-vector-equals-intersection-vector (16 cases)"));
}

#[test]
fn json_report_follows_the_schema() {
    let o = denom(&[
        "check-injectivity",
        "--disk",
        "6",
        "--format",
        "json",
        "--no-timing",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["scenario"], "injectivity");
    assert_eq!(v["config_echo"]["max_degree"], 3);
    assert_eq!(v["counts"]["clusters"], 14);
    assert_eq!(v["duration_ms"], 0);
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["pass"], true);
        assert!(c.get("witness").is_none());
    }
}

#[test]
fn surface_file_and_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let surface = dir.path().join("square.json");
    std::fs::write(&surface, r#"{"genus":0,"boundary":[4],"punctures":1}"#).unwrap();
    let out = dir.path().join("report.csv");
    let o = denom(&[
        "check-segments",
        "--surface",
        surface.to_str().unwrap(),
        "--format",
        "csv",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("scenario,check,pass,cases,witness"));
    assert!(lines.any(|l| l.starts_with("segments,segments-determine-multiset,true,61,")));
}

#[test]
fn negative_control_fails_with_witness() {
    let o = denom(&["negative-control", "--format", "json", "--no-timing"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let failed: Vec<_> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == false)
        .collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| c["witness"].is_object()));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(denom(&["check-injectivity"]).status.code(), Some(2));
    assert_eq!(
        denom(&["check-oracle", "--disk", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        denom(&["check-oracle", "--disk", "4,2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        denom(&["build-strong", "--disk", "4,1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        denom(&["check-lemmas", "--disk", "x"]).status.code(),
        Some(2)
    );
    assert_eq!(denom(&["no-such-command"]).status.code(), Some(2));
    let o = denom(&["check-lemmas", "--surface", "/nonexistent/surface.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot read"));
}

#[test]
fn reports_are_byte_identical() {
    let args = [
        "build-strong",
        "--disk",
        "5,2",
        "--seed",
        "11",
        "--samples",
        "20",
        "--format",
        "json",
        "--no-timing",
    ];
    let a = denom(&args);
    let b = denom(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn report_runs_every_applicable_scenario() {
    let o = denom(&[
        "report",
        "--disk",
        "4,1",
        "--seed",
        "3",
        "--samples",
        "10",
        "--format",
        "json",
        "--no-timing",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let names: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["scenario"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        [
            "injectivity",
            "oracle",
            "lemmas",
            "segments",
            "build-strong"
        ]
    );
}

#[test]
fn infinite_type_smoke_is_labelled() {
    let dir = tempfile::tempdir().unwrap();
    let surface = dir.path().join("annulus.json");
    std::fs::write(&surface, r#"{"genus":0,"boundary":[2,2],"punctures":0}"#).unwrap();
    let o = denom(&[
        "smoke",
        "--surface",
        surface.to_str().unwrap(),
        "--depth",
        "3",
        "--no-timing",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("bounded evidence"));
}
