//! Verification suites: every inequality the library certifies, checked on
//! randomly generated instances at desk scale. Each suite maps to one claim
//! and reports its worst observed violation.

use rayon::prelude::*;

use crate::capacity::{capacity_bound, CapacityAlpha};
use crate::channels::{
    random_doubly_stochastic_channel, random_pauli_channel, random_reversible_liouvillian,
    Liouvillian, PauliDistribution, QuantumChannel,
};
use crate::discrete::{
    alpha_d, discrete_bounds, discrete_entropy_production, improved_data_processing_check,
    pauli_alpha_d, pauli_alpha_d_no_identity_term, power_monotonicity_check, AlphaDMethod,
};
use crate::entropy::pinsker_gap;
use crate::group::{quantum_2to4_bound, t0_depolarizing, weyl_basis};
use crate::ls::{
    alpha1_qubit, alpha1_variational, alpha2_qubit, alpha2_variational, comparison_check,
    depolarizing_alpha2, depolarizing_tensor_bound, entropy_production_curve, sandwich_bounds,
    snapshot_value, spectral_gap, tensor_lower_bound, Direction, LsEstimate, LsKind,
    VariationalOptions,
};
use crate::report::{CheckReport, VerificationReport};
use crate::sample::{random_full_rank_density, random_pure_state, substream};
use crate::Real;

/// The verification suites, one per certified claim family.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    QubitClosedForms,
    DepolarizingAnchor,
    Sandwich,
    Comparison,
    TensorConsistency,
    Hypercontractivity,
    ImprovedDataProcessing,
    PauliClosedForms,
    PowerMonotonicity,
    EntropyCurves,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::QubitClosedForms,
        Suite::DepolarizingAnchor,
        Suite::Sandwich,
        Suite::Comparison,
        Suite::TensorConsistency,
        Suite::Hypercontractivity,
        Suite::ImprovedDataProcessing,
        Suite::PauliClosedForms,
        Suite::PowerMonotonicity,
        Suite::EntropyCurves,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::QubitClosedForms => "qubit-closed-forms",
            Suite::DepolarizingAnchor => "depolarizing-anchor",
            Suite::Sandwich => "sandwich",
            Suite::Comparison => "comparison",
            Suite::TensorConsistency => "tensor-consistency",
            Suite::Hypercontractivity => "hypercontractivity",
            Suite::ImprovedDataProcessing => "improved-data-processing",
            Suite::PauliClosedForms => "pauli-closed-forms",
            Suite::PowerMonotonicity => "power-monotonicity",
            Suite::EntropyCurves => "entropy-curves",
        }
    }

    pub fn claim(&self) -> &'static str {
        match self {
            Suite::QubitClosedForms => {
                "qubit Bloch closed forms agree with the variational alpha_1/alpha_2 estimates to 1e-3"
            }
            Suite::DepolarizingAnchor => {
                "variational alpha_2 of the depolarizing generator matches 2(1-2/d)/log(d-1) (1 at d=2) to 1e-3"
            }
            Suite::Sandwich => {
                "lambda c(d) <= alpha-estimates <= lambda for reversible generators, slack 1e-9"
            }
            Suite::Comparison => {
                "lambda E2_dep <= E2_L <= ||(L+L*)/2|| E2_dep on tensor powers, relative slack 1e-9"
            }
            Suite::TensorConsistency => {
                "snapshot bound at (lambda=1, t0(d)) equals the tensor-stable depolarizing bound to 1e-12"
            }
            Suite::Hypercontractivity => {
                "weighted 2->4 norms: quantum <= 1 at t0 and quantum <= classical on a (t, n) grid, slack 1e-6"
            }
            Suite::ImprovedDataProcessing => {
                "one-step contraction: D(T rho) <= D(rho) - E2((d rho)^(1/2)) and <= (1-alpha_D) D(rho), slack 1e-9"
            }
            Suite::PauliClosedForms => {
                "random Pauli: alpha_2 = 2 min pair sums (1e-3 vs variational); alpha_D formula = Kraus composition (1e-10)"
            }
            Suite::PowerMonotonicity => {
                "alpha_2((T*)^k T^k - id) non-decreasing in k (1e-3); alpha_D inside its gap bracket (1e-9)"
            }
            Suite::EntropyCurves => {
                "entropy trajectories dominate their certified bounds (1e-8); Pinsker gap nonnegative (1e-10)"
            }
        }
    }

    /// Default instance budget, matching the acceptance sizes.
    pub fn default_instances(&self) -> usize {
        match self {
            Suite::QubitClosedForms => 100,
            Suite::DepolarizingAnchor => 1,
            Suite::Sandwich => 500,
            Suite::Comparison => 10_000,
            Suite::TensorConsistency => 1,
            Suite::Hypercontractivity => 1,
            Suite::ImprovedDataProcessing => 10_000,
            Suite::PauliClosedForms => 50,
            Suite::PowerMonotonicity => 50,
            Suite::EntropyCurves => 20,
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|s| s.name() == name)
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub dims: Vec<usize>,
    pub instances: Option<usize>,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { dims: vec![2, 3, 4], instances: None, seed: 7 }
    }
}

impl SuiteConfig {
    fn budget(&self, suite: Suite) -> usize {
        self.instances.unwrap_or_else(|| suite.default_instances()).max(1)
    }

    fn dims_within(&self, lo: usize, hi: usize) -> Vec<usize> {
        let mut dims: Vec<usize> =
            self.dims.iter().copied().filter(|&d| d >= lo && d <= hi).collect();
        if dims.is_empty() {
            dims.push(lo);
        }
        dims.sort_unstable();
        dims.dedup();
        dims
    }
}

/// Run a set of suites and assemble one report.
pub fn run_verification(suites: &[Suite], cfg: &SuiteConfig) -> VerificationReport {
    let mut checks = Vec::new();
    for suite in suites {
        checks.extend(run_suite(*suite, cfg));
    }
    let name = if suites.len() == 1 { suites[0].name() } else { "all" };
    VerificationReport::new(
        name,
        cfg.dims.clone(),
        cfg.instances.unwrap_or(0),
        cfg.seed,
        checks,
    )
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<CheckReport> {
    match suite {
        Suite::QubitClosedForms => qubit_closed_forms(cfg),
        Suite::DepolarizingAnchor => depolarizing_anchor(cfg),
        Suite::Sandwich => sandwich_suite(cfg),
        Suite::Comparison => comparison_suite(cfg),
        Suite::TensorConsistency => tensor_consistency(cfg),
        Suite::Hypercontractivity => hypercontractivity_suite(cfg),
        Suite::ImprovedDataProcessing => improved_data_processing_suite(cfg),
        Suite::PauliClosedForms => pauli_closed_forms(cfg),
        Suite::PowerMonotonicity => power_monotonicity_suite(cfg),
        Suite::EntropyCurves => entropy_curves_suite(cfg),
    }
}

/// Seeded primitive doubly stochastic qubit channel (resampling the rare
/// non-primitive draws).
fn primitive_qubit_channel(seed: u64, index: u64) -> QuantumChannel<Real> {
    let mut rng = substream(seed, index);
    loop {
        let t = random_doubly_stochastic_channel::<Real>(2, 3, &mut rng);
        if let Ok((true, _)) = t.is_primitive() {
            return t;
        }
    }
}

fn qubit_closed_forms(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let count = cfg.budget(Suite::QubitClosedForms);
    let opts = VariationalOptions::with_restarts(32);
    let worst: Real = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let t = primitive_qubit_channel(cfg.seed.wrapping_add(0x51), i);
            let l = Liouvillian::from_channel(&t);
            let exact2 = alpha2_qubit(&t).expect("primitive qubit channel").value;
            let exact1 = alpha1_qubit(&t).expect("primitive qubit channel").value;
            let var2 = alpha2_variational(&l, &opts, cfg.seed.wrapping_add(i)).unwrap().value;
            let var1 = alpha1_variational(&l, &opts, cfg.seed.wrapping_add(i)).unwrap().value;
            (exact2 - var2).abs().max((exact1 - var1).abs())
        })
        .reduce(|| 0.0, Real::max);
    vec![CheckReport::new(
        "qubit-closed-forms/agreement",
        "max |closed form - variational| over alpha_1, alpha_2 on random primitive qubit channels",
        worst,
        1e-3,
    )]
}

fn depolarizing_anchor(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let dims = cfg.dims_within(2, 5);
    let opts = VariationalOptions::with_restarts(32);
    let mut checks = Vec::new();
    for &d in &dims {
        let l = Liouvillian::<Real>::depolarizing(d);
        let est = alpha2_variational(&l, &opts, cfg.seed.wrapping_add(d as u64)).unwrap();
        let target = depolarizing_alpha2::<Real>(d);
        checks.push(CheckReport::new(
            &format!("depolarizing-anchor/d{d}"),
            "variational alpha_2(L_dep) vs the closed form",
            (est.value - target).abs(),
            1e-3,
        ));
    }
    checks
}

fn sandwich_suite(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let per_dim = cfg.budget(Suite::Sandwich);
    let opts = VariationalOptions::with_restarts(4);
    let mut checks = Vec::new();
    for &d in &cfg.dims_within(2, 4) {
        let violation: Real = (0..per_dim as u64)
            .into_par_iter()
            .map(|i| {
                let mut rng = substream(cfg.seed.wrapping_add(0x5A00 + d as u64), i);
                let l = random_reversible_liouvillian::<Real>(d, 3, &mut rng);
                let bounds = sandwich_bounds(&l).unwrap();
                let lambda = bounds.lambda;
                if lambda < 1e-6 {
                    return 0.0; // not primitive; sandwich collapses to zero
                }
                let seed_i = cfg.seed.wrapping_add(i).wrapping_mul(2 + d as u64);
                let a2 = alpha2_variational(&l, &opts, seed_i).unwrap().value;
                let a1 = alpha1_variational(&l, &opts, seed_i).unwrap().value;
                // Direction labels respected: the variational values are
                // upper bounds, so assert lambda c(d) <= estimate <= lambda
                // on both constants and nothing that would order the two
                // optimizer outputs against each other.
                let mut v: Real = 0.0;
                v = v.max(bounds.alpha2_lower.value - a2);
                v = v.max(bounds.alpha1_lower.value - a1);
                v = v.max(a2 - lambda);
                v.max(a1 - lambda)
            })
            .reduce(|| 0.0, Real::max);
        checks.push(CheckReport::new(
            &format!("sandwich/d{d}"),
            "gap sandwich on random reversible generators",
            violation,
            1e-9,
        ));
    }
    checks
}

fn comparison_suite(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let samples = cfg.budget(Suite::Comparison);
    let generators_per_dim = 5u64;
    let mut checks = Vec::new();
    for &d in &cfg.dims_within(2, 3) {
        for copies in [1usize, 2] {
            let mut worst: Real = 0.0;
            for g in 0..generators_per_dim {
                let mut rng = substream(cfg.seed.wrapping_add(0xC0 + d as u64), g);
                let t = random_doubly_stochastic_channel::<Real>(d, 3, &mut rng);
                let l = Liouvillian::from_channel(&t);
                let report = comparison_check(
                    &l,
                    copies,
                    samples,
                    cfg.seed.wrapping_add(g).wrapping_mul(3 + d as u64),
                )
                .unwrap();
                worst = worst.max(report.max_violation_lower).max(report.max_violation_upper);
            }
            checks.push(CheckReport::new(
                &format!("comparison/d{d}-n{copies}"),
                "Dirichlet-form comparison with the depolarizing generator",
                worst,
                1e-9,
            ));
        }
    }
    checks
}

fn tensor_consistency(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let _ = cfg;
    let mut worst_identity: Real = 0.0;
    for d in 2..=8usize {
        let snap = snapshot_value::<Real>(1.0, t0_depolarizing::<Real>(d)).value;
        let tensor = depolarizing_tensor_bound::<Real>(d).value;
        worst_identity = worst_identity.max((snap - tensor).abs());
    }
    let d2_value = depolarizing_tensor_bound::<Real>(2).value;
    vec![
        CheckReport::new(
            "tensor-consistency/identity",
            "snapshot bound at (lambda = 1, t0(d)) equals the tensor-stable bound, d = 2..8",
            worst_identity,
            1e-12,
        ),
        CheckReport::new(
            "tensor-consistency/d2-value",
            "tensor-stable bound at d = 2 equals 0.22656",
            (d2_value - 0.22656).abs(),
            1e-4,
        ),
    ]
}

fn hypercontractivity_suite(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let d = 2usize;
    let l = Liouvillian::<Real>::depolarizing(d);
    let basis = weyl_basis::<Real>(d);
    let t0 = t0_depolarizing::<Real>(d);
    let restarts = 6;

    let mut at_t0: Real = 0.0;
    let mut ordering: Real = 0.0;
    for copies in [1usize, 2] {
        let cmp = quantum_2to4_bound(&l, &basis, t0, copies, restarts, cfg.seed.wrapping_add(copies as u64))
            .unwrap();
        at_t0 = at_t0.max(cmp.quantum - 1.0);
        ordering = ordering.max(cmp.quantum - cmp.classical);
        // Grid of five times around t0.
        for (k, &t) in [0.1, 0.3, t0, 1.0, 2.0].iter().enumerate() {
            let cmp = quantum_2to4_bound(
                &l,
                &basis,
                t,
                copies,
                restarts,
                cfg.seed.wrapping_add(100 + (10 * copies + k) as u64),
            )
            .unwrap();
            ordering = ordering.max(cmp.quantum - cmp.classical);
        }
    }
    vec![
        CheckReport::new(
            "hypercontractivity/at-t0",
            "weighted 2->4 norm of the depolarizing semigroup at t0 stays at or below 1 (n = 1, 2)",
            at_t0,
            1e-6,
        ),
        CheckReport::new(
            "hypercontractivity/quantum-vs-classical",
            "quantum 2->4 estimate never exceeds the classical semigroup estimate on the grid",
            ordering,
            1e-6,
        ),
    ]
}

fn improved_data_processing_suite(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let pairs = cfg.budget(Suite::ImprovedDataProcessing);
    let states_per_channel = 100usize.min(pairs);
    let channels = (pairs / states_per_channel).max(1);
    let mut checks = Vec::new();
    for &d in &cfg.dims_within(2, 4) {
        let worst: Real = (0..channels as u64)
            .into_par_iter()
            .map(|c| {
                let mut rng = substream(cfg.seed.wrapping_add(0x1D00 + d as u64), c);
                let (t, a_d) = loop {
                    let t = random_doubly_stochastic_channel::<Real>(d, 3, &mut rng);
                    match alpha_d(&t, AlphaDMethod::Auto, cfg.seed.wrapping_add(c)) {
                        Ok(r) => break (t, r.alpha_d.value),
                        Err(_) => continue,
                    }
                };
                let mut worst: Real = 0.0;
                for _ in 0..states_per_channel {
                    let rho = random_full_rank_density::<Real>(d, 1e-8, &mut rng);
                    let report = improved_data_processing_check(&t, &rho, a_d).unwrap();
                    worst = worst.max(-report.slack_intermediate).max(-report.slack_final);
                }
                worst
            })
            .reduce(|| 0.0, Real::max);
        checks.push(CheckReport::new(
            &format!("improved-data-processing/d{d}"),
            "both layers of the one-step relative-entropy contraction on random (T, rho)",
            worst,
            1e-9,
        ));
    }
    checks
}

fn pauli_closed_forms(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let count = cfg.budget(Suite::PauliClosedForms);
    let opts = VariationalOptions::with_restarts(24);
    let results: Vec<(Real, Real, Real)> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = substream(cfg.seed.wrapping_add(0xBA), i);
            let w = crate::sample::dirichlet_uniform::<Real>(4, &mut rng);
            let p = PauliDistribution::new(w[0], w[1], w[2]).unwrap();
            let t = random_pauli_channel(&p);

            // LS-2 closed form vs variational.
            let expect = 2.0
                * (w[0] + w[1])
                    .min(w[1] + w[2])
                    .min(w[0] + w[2]);
            let l = Liouvillian::from_channel(&t);
            let gap_defect = (spectral_gap(&l).unwrap().value - expect).abs();
            let var = alpha2_variational(&l, &opts, cfg.seed.wrapping_add(i)).unwrap().value;
            let var_defect = (var - expect).abs();

            // Discrete constant: formula vs Kraus composition.
            let (formula_defect, printed_discrepancy) = match alpha_d(&t, AlphaDMethod::ClosedForm, 1) {
                Ok(r) => {
                    let formula = pauli_alpha_d(&p).value;
                    let printed = pauli_alpha_d_no_identity_term(&p);
                    ((formula - r.alpha_d.value).abs(), (formula - printed).abs())
                }
                Err(_) => (0.0, 0.0),
            };
            (gap_defect.max(var_defect), formula_defect, printed_discrepancy)
        })
        .collect();

    let worst_alpha2 = results.iter().map(|r| r.0).fold(0.0, Real::max);
    let worst_alpha_d = results.iter().map(|r| r.1).fold(0.0, Real::max);
    let max_printed_gap = results.iter().map(|r| r.2).fold(0.0, Real::max);
    vec![
        CheckReport::new(
            "pauli-closed-forms/alpha2",
            "alpha_2(T - id) = 2 min{p1+p2, p2+p3, p3+p1}, against gap and variational routes",
            worst_alpha2,
            1e-3,
        ),
        CheckReport::new(
            "pauli-closed-forms/alpha-d",
            "alpha_D closed form matches the Kraus-composition route",
            worst_alpha_d,
            1e-10,
        ),
        // Informational: how far the identity-free variant of the formula
        // drifts from the Kraus-derived value on these samples. Reported,
        // never asserted.
        CheckReport::new(
            "pauli-closed-forms/identity-free-variant-gap",
            "observed discrepancy of the identity-free formula variant (informational)",
            max_printed_gap,
            Real::INFINITY,
        ),
    ]
}

fn power_monotonicity_suite(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let count = cfg.budget(Suite::PowerMonotonicity);
    let results: Vec<(Real, Real)> = (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let t = primitive_qubit_channel(cfg.seed.wrapping_add(0xF0), i);
            let trace = power_monotonicity_check(&t, 8, AlphaDMethod::Auto, cfg.seed).unwrap();
            let bracket = match (alpha_d(&t, AlphaDMethod::Auto, cfg.seed), discrete_bounds(&t)) {
                (Ok(r), Ok(b)) => {
                    let below = b.lower.value - r.alpha_d.value;
                    let above = r.alpha_d.value - b.upper.value;
                    below.max(above)
                }
                _ => 0.0, // composite not primitive: no bracket to check
            };
            (trace.max_drop, bracket)
        })
        .collect();
    let worst_drop = results.iter().map(|r| r.0).fold(Real::NEG_INFINITY, Real::max).max(0.0);
    let worst_bracket = results.iter().map(|r| r.1).fold(Real::NEG_INFINITY, Real::max).max(0.0);
    vec![
        CheckReport::new(
            "power-monotonicity/non-decreasing",
            "alpha_2((T*)^k T^k - id) never drops along k = 1..8",
            worst_drop,
            1e-3,
        ),
        CheckReport::new(
            "power-monotonicity/bracket",
            "alpha_D sits inside its gap bracket",
            worst_bracket,
            1e-9,
        ),
    ]
}

fn entropy_curves_suite(cfg: &SuiteConfig) -> Vec<CheckReport> {
    let per_dim = cfg.budget(Suite::EntropyCurves);
    let grid: Vec<Real> = (0..=15).map(|k| 0.2 * k as Real).collect();
    let mut continuous: Real = 0.0;
    let mut discrete: Real = 0.0;

    for &d in &cfg.dims_within(2, 4) {
        let worst: (Real, Real) = (0..per_dim as u64)
            .into_par_iter()
            .map(|i| {
                let mut rng = substream(cfg.seed.wrapping_add(0xEC0 + d as u64), i);
                let l = random_reversible_liouvillian::<Real>(d, 3, &mut rng);
                let rho = random_full_rank_density::<Real>(d, 1e-8, &mut rng);
                let bounds = sandwich_bounds(&l).unwrap();
                // Certified lower constant: exact qubit closed form when
                // available, else the sandwich lower bound.
                let alpha: LsEstimate<Real> = bounds.alpha1_lower.clone();
                let mut worst_cont: Real = 0.0;
                match entropy_production_curve(&l, &rho, &grid, &alpha) {
                    Ok(rows) => {
                        for row in rows {
                            worst_cont = worst_cont.max(-row.slack);
                        }
                    }
                    Err(crate::error::Error::BoundViolation { entropy, bound, .. }) => {
                        worst_cont = worst_cont.max(bound - entropy);
                    }
                    Err(e) => panic!("curve evaluation failed: {e}"),
                }

                // Discrete one-step bound on a fresh channel.
                let t = random_doubly_stochastic_channel::<Real>(d, 3, &mut rng);
                let mut worst_disc: Real = 0.0;
                if let Ok(report) = discrete_entropy_production(&t, &rho) {
                    worst_disc = worst_disc.max(-report.slack);
                }
                (worst_cont, worst_disc)
            })
            .reduce(|| (0.0, 0.0), |a, b| (a.0.max(b.0), a.1.max(b.1)));
        continuous = continuous.max(worst.0);
        discrete = discrete.max(worst.1);
    }

    // Tensor-product curve: certified tensor-stable constant on two copies.
    let mut tensor_curve: Real = 0.0;
    for &d in &cfg.dims_within(2, 3) {
        for i in 0..(per_dim as u64).min(10) {
            let mut rng = substream(cfg.seed.wrapping_add(0xEC40 + d as u64), i);
            let l = random_reversible_liouvillian::<Real>(d, 3, &mut rng);
            let tb = match tensor_lower_bound(&l) {
                Ok(tb) => tb,
                Err(_) => continue, // not primitive
            };
            let l2 = l.tensor_power(2).unwrap();
            let rho = random_pure_state::<Real>(d * d, &mut rng);
            // The tensor-stable constant certifies the 2-alpha exponent on
            // every tensor power of the reversible semigroup.
            let alpha = LsEstimate {
                kind: LsKind::Alpha2,
                direction: Direction::Lower,
                ..tb.lower.clone()
            };
            match entropy_production_curve(&l2, &rho, &grid, &alpha) {
                Ok(rows) => {
                    for row in rows {
                        tensor_curve = tensor_curve.max(-row.slack);
                    }
                }
                Err(crate::error::Error::BoundViolation { entropy, bound, .. }) => {
                    tensor_curve = tensor_curve.max(bound - entropy);
                }
                Err(e) => panic!("tensor curve evaluation failed: {e}"),
            }
        }
    }

    // Capacity bound sanity on the same certified constants.
    let l = Liouvillian::<Real>::depolarizing(2);
    let cap = capacity_bound(&l, &grid, CapacityAlpha::TensorBound).unwrap();
    let mut capacity_defect: Real = (cap.rows[0].1 - 2.0f64.ln()).abs();
    for w in cap.rows.windows(2) {
        if w[1].1 >= w[0].1 {
            capacity_defect = capacity_defect.max(w[1].1 - w[0].1 + 1e-15);
        }
    }

    // Pinsker sweep.
    let pairs = 2_000usize.max(per_dim * 100);
    let pinsker_violation: Real = (0..pairs as u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = substream(cfg.seed.wrapping_add(0xB1u64), i);
            let d = [2usize, 3, 4][(i % 3) as usize];
            let rho = crate::sample::random_density::<Real>(d, &mut rng);
            let sigma = random_full_rank_density::<Real>(d, 1e-8, &mut rng);
            (-pinsker_gap(&rho, &sigma).unwrap()).max(0.0)
        })
        .reduce(|| 0.0, Real::max);

    vec![
        CheckReport::new(
            "entropy-curves/continuous",
            "S(T_t rho) dominates the certified exponential bound on the grid",
            continuous,
            1e-8,
        ),
        CheckReport::new(
            "entropy-curves/tensor",
            "two-copy trajectories dominate the tensor-stable bound",
            tensor_curve,
            1e-8,
        ),
        CheckReport::new(
            "entropy-curves/discrete",
            "one-step entropy gain dominates the discrete spectral bound",
            discrete,
            1e-9,
        ),
        CheckReport::new(
            "entropy-curves/capacity",
            "capacity bound starts at log d and strictly decreases",
            capacity_defect,
            1e-12,
        ),
        CheckReport::new(
            "entropy-curves/pinsker",
            "relative entropy dominates half the squared trace distance",
            pinsker_violation,
            1e-10,
        ),
    ]
}
