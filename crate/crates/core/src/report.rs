//! Serializable report types for the CLI (`qls-report/1` schema).

use serde::{Deserialize, Serialize};

use crate::ls::{Direction, LsEstimate, LsKind, LsMethod};
use crate::Real;

pub const REPORT_SCHEMA: &str = "qls-report/1";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EstimateReport {
    pub kind: String,
    pub value: Real,
    pub method: String,
    pub direction: String,
    pub restarts: usize,
    pub iterations: usize,
    pub note: String,
}

impl EstimateReport {
    pub fn from_estimate(est: &LsEstimate<Real>) -> Self {
        EstimateReport {
            kind: kind_name(est.kind).into(),
            value: est.value,
            method: method_name(est.method).into(),
            direction: direction_name(est.direction).into(),
            restarts: est.meta.restarts,
            iterations: est.meta.iterations,
            note: est.meta.note.clone(),
        }
    }
}

pub fn kind_name(kind: LsKind) -> &'static str {
    match kind {
        LsKind::Alpha1 => "alpha1",
        LsKind::Alpha2 => "alpha2",
        LsKind::Gap => "gap",
        LsKind::AlphaD => "alphaD",
    }
}

pub fn method_name(method: LsMethod) -> &'static str {
    match method {
        LsMethod::ClosedForm => "closed-form",
        LsMethod::Variational => "variational",
        LsMethod::SandwichBound => "sandwich-bound",
        LsMethod::SnapshotBound => "snapshot-bound",
        LsMethod::TensorBound => "tensor-bound",
    }
}

pub fn direction_name(direction: Direction) -> &'static str {
    match direction {
        Direction::Exact => "exact",
        Direction::Upper => "upper",
        Direction::Lower => "lower",
    }
}

/// One verified claim: the largest violation observed against its tolerance.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: String,
    pub claim: String,
    pub max_violation: Real,
    pub tolerance: Real,
    pub pass: bool,
}

impl CheckReport {
    pub fn new(id: &str, claim: &str, max_violation: Real, tolerance: Real) -> Self {
        CheckReport {
            id: id.into(),
            claim: claim.into(),
            max_violation,
            tolerance,
            pass: max_violation <= tolerance,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub suite: String,
    pub dims: Vec<usize>,
    pub instances: usize,
    pub seed: u64,
    pub checks: Vec<CheckReport>,
    pub pass: bool,
    /// Wall-clock seconds; omitted by default so identical inputs produce
    /// byte-identical reports. Populated only on request.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_secs: Option<f64>,
}

impl VerificationReport {
    pub fn new(suite: &str, dims: Vec<usize>, instances: usize, seed: u64, checks: Vec<CheckReport>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        VerificationReport {
            schema: REPORT_SCHEMA.into(),
            suite: suite.into(),
            dims,
            instances,
            seed,
            checks,
            pass,
            wall_secs: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_pass_logic() {
        let ok = CheckReport::new("a", "x <= y", 1e-12, 1e-9);
        assert!(ok.pass);
        let bad = CheckReport::new("b", "x <= y", 1e-6, 1e-9);
        assert!(!bad.pass);
        let report = VerificationReport::new("s", vec![2], 10, 7, vec![ok, bad]);
        assert!(!report.pass);
    }

    #[test]
    fn serialization_is_stable_and_omits_timing() {
        let report = VerificationReport::new("s", vec![2, 3], 5, 1, vec![]);
        let a = serde_json::to_string(&report).unwrap();
        let b = serde_json::to_string(&report).unwrap();
        assert_eq!(a, b);
        assert!(!a.contains("wall_secs"));
    }
}
