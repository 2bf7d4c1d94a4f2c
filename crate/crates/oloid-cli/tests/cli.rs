//! End-to-end tests of the binary: output schemas, round-trips, gap
//! markers, exit codes, and plot determinism.

use std::process::{Command, Output};

fn oloid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oloid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(str::to_owned)
        .collect()
}

#[test]
fn touching_csv_is_a_closed_loop() {
    let out = oloid(&[
        "sample", "touching", "--lambda", "0.3", "--n", "400", "--format", "csv",
    ]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "object,lambda,branch,t,x,y,z");
    assert_eq!(lines.len(), 401);
    assert!(lines.iter().all(|l| !l.contains(",gap,")));

    let coords = |line: &str| -> Vec<f64> {
        line.split(',')
            .skip(4)
            .map(|v| v.parse::<f64>().unwrap())
            .collect()
    };
    let first = coords(&lines[1]);
    let last = coords(&lines[400]);
    for (a, b) in first.iter().zip(&last) {
        assert!((a - b).abs() < 1e-9, "loop endpoints differ: {a} vs {b}");
    }
}

#[test]
fn csv_numbers_round_trip_bit_identically() {
    let out = oloid(&[
        "sample", "regression", "--n", "50", "--format", "csv",
    ]);
    assert!(out.status.success());
    for line in stdout_lines(&out).iter().skip(1) {
        for field in line.split(',').skip(3) {
            if field.is_empty() {
                continue;
            }
            let v: f64 = field.parse().unwrap();
            assert_eq!(format!("{v:.16e}"), *field);
        }
    }
}

#[test]
fn json_schema_carries_lambda_and_coords() {
    let out = oloid(&[
        "sample",
        "touching",
        "--lambda",
        "0.3,inf",
        "--n",
        "10",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let items: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let items = items.as_array().unwrap();
    assert_eq!(items.len(), 20);
    assert_eq!(items[0]["object"], "touching");
    assert_eq!(items[0]["lambda"], 0.3);
    assert_eq!(items[10]["lambda"], "inf");
    assert_eq!(items[0]["coords"].as_array().unwrap().len(), 3);
}

#[test]
fn pole_parameters_become_gap_rows() {
    // 1 + lambda cos t vanishes exactly at lambda = -1, t = 0.
    let out = oloid(&[
        "sample",
        "dev-touching",
        "--lambda",
        "-1",
        "--t-min",
        "-1",
        "--t-max",
        "1",
        "--n",
        "3",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 4);
    assert!(lines[2].contains(",gap,"));
    assert!(lines[2].ends_with(",,"), "gap row keeps coordinate fields empty");
    assert!(!lines[1].contains(",gap,"));
    assert!(!lines[3].contains(",gap,"));
}

#[test]
fn lambda_usage_is_checked() {
    let out = oloid(&["sample", "regression", "--lambda", "0.3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = oloid(&["sample", "touching"]);
    assert_eq!(out.status.code(), Some(2));
    let out = oloid(&["sample", "touching", "--lambda", "abc"]);
    assert_eq!(out.status.code(), Some(2));
    let out = oloid(&["sample", "nonsense", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes_track_the_report() {
    let out = oloid(&["verify", "--suite", "golden-points"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("criterion 1 (golden-points): PASS"));

    let out = oloid(&["verify", "--suite", "surface-area", "--tol", "1e-12"]);
    assert_eq!(out.status.code(), Some(1));

    let out = oloid(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn plots_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for path in [&a, &b] {
        let out = oloid(&[
            "plot",
            "touching@0.3,0.5:thick",
            "asymptotes:dashed",
            "--projection",
            "x",
            "--window",
            "2.5",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let bytes_a = std::fs::read(&a).unwrap();
    let bytes_b = std::fs::read(&b).unwrap();
    assert_eq!(bytes_a, bytes_b);
    let text = String::from_utf8(bytes_a).unwrap();
    assert!(text.starts_with("<svg"));
    assert!(text.matches("<polyline").count() >= 3);
    assert!(text.contains("stroke-dasharray"));
}

#[test]
fn plot_projection_must_match_the_objects() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.svg");
    let out = oloid(&[
        "plot",
        "dev-touching@0.5",
        "--projection",
        "x",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = oloid(&[
        "plot",
        "dev-touching@0.5",
        "--projection",
        "plane",
        "--window",
        "12",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
}
