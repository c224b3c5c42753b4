//! Acceptance gate: every certified inequality at its stated tolerance and
//! instance count. Each test prints one pass/fail line.

use std::time::Instant;

use qls::report::CheckReport;
use qls::verify::{run_suite, Suite, SuiteConfig};

fn report(criterion: &str, checks: &[CheckReport], started: Instant, budget_secs: Option<f64>) {
    let elapsed = started.elapsed().as_secs_f64();
    let mut all_pass = true;
    for check in checks {
        all_pass &= check.pass;
    }
    let within_budget = budget_secs.map(|b| elapsed <= b).unwrap_or(true);
    println!(
        "ACCEPTANCE {criterion}: {} ({:.1}s{})",
        if all_pass && within_budget { "PASS" } else { "FAIL" },
        elapsed,
        budget_secs.map(|b| format!(" / budget {b:.0}s")).unwrap_or_default()
    );
    for check in checks {
        println!(
            "    {} {:45} violation {:.3e} (tol {:.1e})",
            if check.pass { "pass" } else { "FAIL" },
            check.id,
            check.max_violation,
            check.tolerance
        );
        assert!(
            check.pass,
            "{criterion}: {} violated ({:.3e} > {:.3e})",
            check.id, check.max_violation, check.tolerance
        );
    }
    if let Some(budget) = budget_secs {
        assert!(
            elapsed <= budget,
            "{criterion}: runtime {elapsed:.1}s exceeded the {budget:.0}s budget"
        );
    }
}

#[test]
fn criterion_01_qubit_closed_forms() {
    let started = Instant::now();
    let cfg = SuiteConfig { dims: vec![2], instances: Some(100), seed: 7 };
    let checks = run_suite(Suite::QubitClosedForms, &cfg);
    report("1 qubit-closed-forms", &checks, started, Some(120.0));
}

#[test]
fn criterion_02_depolarizing_anchor() {
    let started = Instant::now();
    let cfg = SuiteConfig { dims: vec![2, 3, 4, 5], instances: None, seed: 7 };
    let checks = run_suite(Suite::DepolarizingAnchor, &cfg);
    report("2 depolarizing-anchor", &checks, started, None);
}

#[test]
fn criterion_03_sandwich() {
    let started = Instant::now();
    let cfg = SuiteConfig { dims: vec![2, 3, 4], instances: Some(500), seed: 7 };
    let checks = run_suite(Suite::Sandwich, &cfg);
    report("3 sandwich", &checks, started, None);
}

#[test]
fn criterion_04_comparison() {
    let started = Instant::now();
    let cfg = SuiteConfig { dims: vec![2, 3], instances: Some(10_000), seed: 7 };
    let checks = run_suite(Suite::Comparison, &cfg);
    report("4 comparison", &checks, started, None);
}

#[test]
fn criterion_05_tensor_consistency() {
    let started = Instant::now();
    let cfg = SuiteConfig::default();
    let checks = run_suite(Suite::TensorConsistency, &cfg);
    report("5 tensor-consistency", &checks, started, None);
}

#[test]
fn criterion_06_hypercontractivity() {
    let started = Instant::now();
    let cfg = SuiteConfig { dims: vec![2], instances: None, seed: 7 };
    let checks = run_suite(Suite::Hypercontractivity, &cfg);
    report("6 hypercontractivity", &checks, started, Some(300.0));
}

#[test]
fn criterion_07_improved_data_processing() {
    let started = Instant::now();
    let cfg = SuiteConfig { dims: vec![2, 3, 4], instances: Some(10_000), seed: 7 };
    let checks = run_suite(Suite::ImprovedDataProcessing, &cfg);
    report("7 improved-data-processing", &checks, started, None);
}

#[test]
fn criterion_08_pauli_closed_forms() {
    let started = Instant::now();
    let cfg = SuiteConfig { dims: vec![2], instances: Some(50), seed: 7 };
    let checks = run_suite(Suite::PauliClosedForms, &cfg);
    // The identity-free-variant check is informational (tolerance infinity):
    // its observed discrepancy is reported, never asserted.
    let informational = checks
        .iter()
        .find(|c| c.id.contains("identity-free-variant"))
        .expect("discrepancy is reported");
    println!(
        "    note: identity-free formula variant deviates by up to {:.3e} on these samples",
        informational.max_violation
    );
    report("8 pauli-closed-forms", &checks, started, None);
}

#[test]
fn criterion_09_power_monotonicity() {
    let started = Instant::now();
    let cfg = SuiteConfig { dims: vec![2], instances: Some(50), seed: 7 };
    let checks = run_suite(Suite::PowerMonotonicity, &cfg);
    report("9 power-monotonicity", &checks, started, None);
}

#[test]
fn criterion_10_entropy_curves() {
    let started = Instant::now();
    let cfg = SuiteConfig { dims: vec![2, 3, 4], instances: Some(20), seed: 7 };
    let checks = run_suite(Suite::EntropyCurves, &cfg);
    report("10 entropy-curves", &checks, started, None);
}
