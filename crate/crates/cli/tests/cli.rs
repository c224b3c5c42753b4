//! End-to-end checks of the command surface: exit codes, formats and
//! byte-for-byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn qls(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qls"))
        .args(args)
        .env("QLS_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("qls-cli-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn channel_make_validate_and_closed_form() {
    let file = tmp("pauli.json");
    let out = qls(&[
        "channel", "make", "--kind", "pauli", "--p1", "0.1", "--p2", "0.2", "--p3", "0.3",
        "--out", file.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let out = qls(&["channel", "validate", file.to_str().unwrap()]);
    assert!(out.status.success());
    let summary: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(summary["dim"], 2);
    assert_eq!(summary["primitive"], true);

    // alpha_2 = 2 min{p1+p2, p2+p3, p3+p1} = 0.6 for these weights.
    let out = qls(&["ls", "--channel", file.to_str().unwrap(), "--kind", "alpha2", "--method", "auto"]);
    assert!(out.status.success());
    let est: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(est["method"], "closed-form");
    assert_eq!(est["direction"], "exact");
    assert!((est["value"].as_f64().unwrap() - 0.6).abs() < 1e-12);

    std::fs::remove_file(&file).ok();
}

#[test]
fn outputs_are_byte_identical_for_identical_argv() {
    let file = tmp("random.json");
    let out = qls(&[
        "channel", "make", "--kind", "random", "--d", "3", "--k", "3", "--seed", "11",
        "--out", file.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let run = || {
        qls(&[
            "ls", "--channel", file.to_str().unwrap(), "--kind", "alpha2",
            "--method", "variational", "--restarts", "6", "--seed", "5",
        ])
    };
    let a = run();
    let b = run();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "variational estimates must be reproducible");

    let curve_a = tmp("curve-a.csv");
    let curve_b = tmp("curve-b.csv");
    for (path, _) in [(&curve_a, 0), (&curve_b, 1)] {
        let out = qls(&[
            "curve", "--liouvillian", "dep", "--d", "2", "--rho", "pure", "--tmax", "3",
            "--steps", "20", "--seed", "9", "--out", path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let bytes_a = std::fs::read(&curve_a).unwrap();
    let bytes_b = std::fs::read(&curve_b).unwrap();
    assert_eq!(bytes_a, bytes_b, "curve CSV must be byte-identical");
    let text = String::from_utf8(bytes_a).unwrap();
    assert!(text.starts_with("t,entropy,bound,slack\n"));
    assert_eq!(text.lines().count(), 22, "header plus 21 rows");

    let verify = || {
        qls(&["verify", "--suite", "tensor-consistency", "--dims", "2", "--seed", "3"])
    };
    let a = verify();
    let b = verify();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "verification reports must be reproducible");

    std::fs::remove_file(&file).ok();
    std::fs::remove_file(&curve_a).ok();
    std::fs::remove_file(&curve_b).ok();
}

#[test]
fn verify_reports_and_exit_codes() {
    let out = qls(&["verify", "--list"]);
    assert!(out.status.success());
    let listing = String::from_utf8(out.stdout).unwrap();
    for name in [
        "qubit-closed-forms",
        "sandwich",
        "comparison",
        "tensor-consistency",
        "hypercontractivity",
        "improved-data-processing",
        "pauli-closed-forms",
        "power-monotonicity",
        "entropy-curves",
        "depolarizing-anchor",
    ] {
        assert!(listing.contains(name), "suite {name} missing from --list");
    }

    // A small real run: report schema, pass flag, exit code 0.
    let out = qls(&[
        "verify", "--suite", "sandwich", "--dims", "2", "--instances", "5", "--seed", "3",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["schema"], "qls-report/1");
    assert_eq!(report["pass"], true);
    assert!(report.get("wall_secs").is_none(), "timing only with --timing");

    // Unknown suite and broken input map to exit code 2.
    let out = qls(&["verify", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
    let out = qls(&["ls", "--channel", "/nonexistent/channel.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hyper_and_capacity_commands() {
    let out = qls(&["hyper", "--d", "2", "--n", "1", "--t", "t0", "--restarts", "4", "--seed", "2"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["quantum"].as_f64().unwrap() <= 1.0 + 1e-6);
    assert_eq!(report["ordered"], true);

    let out = qls(&["capacity", "--liouvillian", "dep", "--d", "2", "--tmax", "1", "--steps", "2"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = report["rows"].as_array().unwrap();
    assert!((rows[0]["bound"].as_f64().unwrap() - 2.0f64.ln()).abs() < 1e-12);
    assert!((report["alpha"].as_f64().unwrap() - 0.22656).abs() < 1e-4);
}
