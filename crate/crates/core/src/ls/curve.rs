//! Entropy-production certificates along semigroup trajectories and the
//! Dirichlet-form comparison sweep.

use rayon::prelude::*;

use super::{symmetrized_extremes, Direction, LsEstimate, LsKind};
use crate::channels::Liouvillian;
use crate::entropy::{dirichlet_form_2_superop, von_neumann_entropy};
use crate::error::{Error, Result};
use crate::linalg::Density;
use crate::sample::{random_psd, substream};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug)]
pub struct CurveRow<T> {
    pub t: T,
    pub entropy: T,
    pub bound: T,
    pub slack: T,
}

/// Tabulate `S(T_t rho0)` against the certified lower bound
/// `S(rho0) + (1 - e^{-f t})(log d - S(rho0))`.
///
/// The exponent factor `f` is `2 alpha` for LS-1 certificates and for LS-2
/// certificates of reversible generators, and `alpha` for LS-2 certificates
/// without reversibility (the weaker hypercontractive exponent).
pub fn entropy_production_curve<T: Scalar>(
    l: &Liouvillian<T>,
    rho0: &Density<T>,
    ts: &[T],
    alpha: &LsEstimate<T>,
) -> Result<Vec<CurveRow<T>>> {
    if !matches!(alpha.direction, Direction::Lower | Direction::Exact) {
        return Err(Error::InvalidInput {
            field: "alpha".into(),
            message: "curve certificates need a lower or exact constant".into(),
        });
    }
    let factor = match alpha.kind {
        LsKind::Alpha1 => T::of(2.0) * alpha.value,
        LsKind::Alpha2 => {
            if l.is_reversible() {
                T::of(2.0) * alpha.value
            } else {
                alpha.value
            }
        }
        _ => {
            return Err(Error::InvalidInput {
                field: "alpha".into(),
                message: "curve certificates take alpha_1 or alpha_2 estimates".into(),
            })
        }
    };
    let d = l.dim();
    let log_d = T::of(d as f64).ln();
    let s0 = von_neumann_entropy(rho0);
    // Reversible generators have a Hermitian superoperator: decompose once
    // and exponentiate eigenvalues per grid point instead of calling a full
    // matrix exponential for every t.
    let spectral = l
        .is_reversible()
        .then(|| crate::linalg::Hermitian::symmetrized(l.superop()).eig());
    let mut rows = Vec::with_capacity(ts.len());
    for &t in ts {
        let evolved_mat = match &spectral {
            Some(dec) => {
                let v = &dec.eigenvectors;
                let mut w = v.dagger().mul_vec(&rho0.mat().vec());
                for (wi, &lam) in w.iter_mut().zip(dec.eigenvalues.iter()) {
                    *wi *= num_complex::Complex::new((lam * t).exp(), T::zero());
                }
                crate::linalg::Mat::unvec(&v.mul_vec(&w), d)
            }
            None => {
                let prop = crate::linalg::expm(&l.superop().scale_re(t))?;
                crate::linalg::Mat::unvec(&prop.mul_vec(&rho0.mat().vec()), d)
            }
        };
        let evolved = Density::new(evolved_mat).map_err(|e| Error::InvalidInput {
            field: "rho0".into(),
            message: format!("evolution left the state space: {e}"),
        })?;
        let entropy = von_neumann_entropy(&evolved);
        let bound = s0 + (T::one() - (-factor * t).exp()) * (log_d - s0);
        let slack = entropy - bound;
        if slack < -T::of(1e-8) {
            return Err(Error::BoundViolation {
                t: t.to_f64().unwrap_or(f64::NAN),
                entropy: entropy.to_f64().unwrap_or(f64::NAN),
                bound: bound.to_f64().unwrap_or(f64::NAN),
            });
        }
        rows.push(CurveRow { t, entropy, bound, slack });
    }
    Ok(rows)
}

/// Outcome of the Dirichlet-form comparison against the depolarizing
/// generator on random positive matrices.
#[derive(Clone, Debug)]
pub struct ComparisonReport<T> {
    pub dim: usize,
    pub copies: usize,
    pub samples: usize,
    pub lambda: T,
    pub symmetrized_norm: T,
    /// Largest relative violation of
    /// `E^2_{L^(n)}(X) >= lambda E^2_{dep^(n)}(X)`.
    pub max_violation_lower: T,
    /// Largest relative violation of
    /// `E^2_{L^(n)}(X) <= ||(L+L^*)/2|| E^2_{dep^(n)}(X)`.
    pub max_violation_upper: T,
}

impl<T: Scalar> ComparisonReport<T> {
    pub fn passes(&self, tol: T) -> bool {
        self.max_violation_lower <= tol && self.max_violation_upper <= tol
    }
}

/// Verify both comparison inequalities on `samples` random positive matrices
/// of the `copies`-fold tensor algebra.
pub fn comparison_check<T: Scalar>(
    l: &Liouvillian<T>,
    copies: usize,
    samples: usize,
    seed: u64,
) -> Result<ComparisonReport<T>> {
    l.require_doubly_stochastic()?;
    let d = l.dim();
    let (lambda, norm) = symmetrized_extremes(l);
    let l_n = l.tensor_power(copies)?;
    let dep_n = Liouvillian::depolarizing(d).tensor_power(copies)?;
    let big = l_n.dim();
    let s_l = l_n.symmetrized_superop();
    let s_dep = dep_n.symmetrized_superop();

    let violations: Vec<(T, T)> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = substream(seed, i as u64);
            let x = random_psd::<T>(big, &mut rng).hermitize();
            let e_l = dirichlet_form_2_superop(&s_l, &x);
            let e_dep = dirichlet_form_2_superop(&s_dep, &x);
            let scale = T::one().max(e_l.abs()).max(e_dep.abs() * norm.max(lambda));
            let low = (lambda * e_dep - e_l) / scale;
            let up = (e_l - norm * e_dep) / scale;
            (low.max(T::zero()), up.max(T::zero()))
        })
        .collect();

    let mut max_low = T::zero();
    let mut max_up = T::zero();
    for (low, up) in violations {
        max_low = max_low.max(low);
        max_up = max_up.max(up);
    }
    Ok(ComparisonReport {
        dim: d,
        copies,
        samples,
        lambda,
        symmetrized_norm: norm,
        max_violation_lower: max_low,
        max_violation_upper: max_up,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::random_doubly_stochastic_channel;
    use crate::sample::{random_pure_state, rng_from_seed};

    #[test]
    fn flat_curve_at_maximally_mixed() {
        let l = Liouvillian::<f64>::depolarizing(2);
        let rho = Density::maximally_mixed(2);
        let alpha = LsEstimate::exact(LsKind::Alpha2, 1.0, "depolarizing closed form");
        let ts: Vec<f64> = (0..10).map(|k| 0.3 * k as f64).collect();
        let rows = entropy_production_curve(&l, &rho, &ts, &alpha).unwrap();
        for row in rows {
            assert!((row.entropy - 2.0f64.ln()).abs() < 1e-9);
            assert!((row.bound - 2.0f64.ln()).abs() < 1e-9);
        }
    }

    #[test]
    fn depolarizing_pure_state_curve_holds() {
        let l = Liouvillian::<f64>::depolarizing(2);
        let mut rng = rng_from_seed(61);
        let rho = random_pure_state(2, &mut rng);
        // alpha_1 certificate with the qubit value lambda = 1.
        let alpha = LsEstimate::exact(LsKind::Alpha1, 1.0, "qubit closed form");
        let ts: Vec<f64> = (0..=30).map(|k| 0.1 * k as f64).collect();
        let rows = entropy_production_curve(&l, &rho, &ts, &alpha).unwrap();
        assert!((rows[0].bound - 0.0).abs() < 1e-12, "t = 0 bound is S(rho0)");
        for row in &rows {
            assert!(row.slack >= -1e-8);
        }
    }

    #[test]
    fn rejects_upper_direction_certificates() {
        let l = Liouvillian::<f64>::depolarizing(2);
        let rho = Density::maximally_mixed(2);
        let alpha = LsEstimate::upper(
            LsKind::Alpha2,
            1.0,
            super::super::LsMethod::Variational,
            Default::default(),
        );
        assert!(entropy_production_curve(&l, &rho, &[0.0], &alpha).is_err());
    }

    #[test]
    fn bogus_certificate_is_caught() {
        // A deliberately inflated "exact" constant must trip the row
        // invariant rather than silently produce a broken table.
        let l = Liouvillian::<f64>::depolarizing(2);
        let mut rng = rng_from_seed(63);
        let rho = random_pure_state(2, &mut rng);
        let alpha = LsEstimate::exact(LsKind::Alpha1, 5.0, "deliberately wrong");
        let ts: Vec<f64> = (1..=5).map(|k| 0.2 * k as f64).collect();
        assert!(matches!(
            entropy_production_curve(&l, &rho, &ts, &alpha),
            Err(crate::error::Error::BoundViolation { .. })
        ));
    }

    #[test]
    fn comparison_is_tight_for_depolarizing() {
        let l = Liouvillian::<f64>::depolarizing(2);
        let report = comparison_check(&l, 2, 200, 3).unwrap();
        assert!((report.lambda - 1.0).abs() < 1e-10);
        assert!((report.symmetrized_norm - 1.0).abs() < 1e-10);
        assert!(report.passes(1e-9), "violations {:?}", report);
    }

    #[test]
    fn comparison_holds_for_random_qubit_generator() {
        let mut rng = rng_from_seed(62);
        let t = random_doubly_stochastic_channel::<f64>(2, 3, &mut rng);
        let l = Liouvillian::from_channel(&t);
        let report = comparison_check(&l, 2, 500, 4).unwrap();
        assert!(report.passes(1e-9), "violations {:?}", report);
    }
}
