//! Certified bounds: the gap sandwich, tensor-stable lower bounds and the
//! fixed-time hypercontractivity snapshot.

use super::{
    depolarizing_alpha2, liouvillian_is_primitive, symmetrized_extremes, LsEstimate, LsKind,
    LsMethod,
};
use crate::channels::Liouvillian;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Two-sided brackets for the LS constants in terms of the spectral gap.
#[derive(Clone, Debug)]
pub struct SandwichBounds<T> {
    pub lambda: T,
    pub reversible: bool,
    pub alpha2_lower: LsEstimate<T>,
    pub alpha2_upper: LsEstimate<T>,
    pub alpha1_lower: LsEstimate<T>,
    pub alpha1_upper: LsEstimate<T>,
}

/// Gap sandwich. Reversible generators satisfy
/// `lambda c(d) <= alpha_2 <= alpha_1 <= lambda` with
/// `c(d) = 2(1 - 2/d)/log(d-1)` (1 at d = 2); without reversibility the
/// middle link weakens to `alpha_2 / 2 <= alpha_1`.
pub fn sandwich_bounds<T: Scalar>(l: &Liouvillian<T>) -> Result<SandwichBounds<T>> {
    l.require_doubly_stochastic()?;
    let (lambda, _) = symmetrized_extremes(l);
    let reversible = l.is_reversible();
    let c = depolarizing_alpha2::<T>(l.dim());
    let note_low = "gap sandwich lower bound";
    let note_up = "gap sandwich upper bound";
    let (a2_low, a2_up, a1_low, a1_up) = if reversible {
        (lambda * c, lambda, lambda * c, lambda)
    } else {
        // alpha_2 >= lambda c(d) still holds through the symmetrization;
        // alpha_1 is only bounded below by alpha_2 / 2.
        (lambda * c, T::of(2.0) * lambda, lambda * c * T::of(0.5), lambda)
    };
    Ok(SandwichBounds {
        lambda,
        reversible,
        alpha2_lower: LsEstimate::lower(LsKind::Alpha2, a2_low, LsMethod::SandwichBound, note_low),
        alpha2_upper: upper_bound_estimate(LsKind::Alpha2, a2_up, note_up),
        alpha1_lower: LsEstimate::lower(LsKind::Alpha1, a1_low, LsMethod::SandwichBound, note_low),
        alpha1_upper: upper_bound_estimate(LsKind::Alpha1, a1_up, note_up),
    })
}

fn upper_bound_estimate<T: Scalar>(kind: LsKind, value: T, note: &str) -> LsEstimate<T> {
    LsEstimate::upper(
        kind,
        value,
        LsMethod::SandwichBound,
        super::EstimateMeta { restarts: 0, iterations: 0, note: note.into() },
    )
}

/// Tensor-stable bounds on `alpha_2(L^(n))`, valid for every `n`.
#[derive(Clone, Debug)]
pub struct TensorBound<T> {
    pub lambda: T,
    pub symmetrized_norm: T,
    /// `lambda (1 - 2 d^-2) / (log 3 log(d^2 - 1) + 2 (1 - 2 d^-2))`.
    pub lower: LsEstimate<T>,
    /// `||(L + L^*)/2|| * 2 (1 - 2/d) / log(d - 1)`.
    pub upper: LsEstimate<T>,
    /// For qubits the constant is tensor stable at the gap itself.
    pub qubit_exact: Option<LsEstimate<T>>,
}

/// Dimension-only version of the tensor-stable lower bound (the depolarizing
/// generator has unit gap).
pub fn depolarizing_tensor_bound<T: Scalar>(d: usize) -> LsEstimate<T> {
    assert!(d >= 2);
    let dd = T::of(d as f64);
    let a = T::one() - T::of(2.0) / (dd * dd);
    let value = a / (T::of(3.0).ln() * (dd * dd - T::one()).ln() + T::of(2.0) * a);
    LsEstimate::lower(
        LsKind::Alpha2,
        value,
        LsMethod::TensorBound,
        "tensor-stable depolarizing lower bound",
    )
}

/// Tensor-stable bracket for a general primitive doubly stochastic generator.
pub fn tensor_lower_bound<T: Scalar>(l: &Liouvillian<T>) -> Result<TensorBound<T>> {
    let (prim, witness) = liouvillian_is_primitive(l)?;
    if !prim {
        return Err(Error::NotPrimitive(witness.len()));
    }
    let d = l.dim();
    let (lambda, norm) = symmetrized_extremes(l);
    let base = depolarizing_tensor_bound::<T>(d);
    let lower = LsEstimate::lower(
        LsKind::Alpha2,
        lambda * base.value,
        LsMethod::TensorBound,
        "comparison with the depolarizing generator, tensor stable",
    );
    let upper = upper_bound_estimate(
        LsKind::Alpha2,
        norm * depolarizing_alpha2::<T>(d),
        "comparison upper bound via the symmetrized norm",
    );
    let qubit_exact = (d == 2).then(|| {
        LsEstimate::exact(LsKind::Alpha2, lambda, "qubit tensor stability: alpha_2(L^(n)) = gap")
    });
    Ok(TensorBound { lambda, symmetrized_norm: norm, lower, upper, qubit_exact })
}

/// Snapshot bound `lambda / (4 lambda t0 + 2)` from 2->4 hypercontractivity
/// certified at time `t0`; the caller supplies that certificate.
pub fn snapshot_bound<T: Scalar>(l: &Liouvillian<T>, t0: T) -> Result<LsEstimate<T>> {
    l.require_doubly_stochastic()?;
    if !l.is_reversible() {
        return Err(Error::NotReversible(
            l.reversibility_defect().to_f64().unwrap_or(f64::NAN),
        ));
    }
    let (lambda, _) = symmetrized_extremes(l);
    Ok(snapshot_value(lambda, t0))
}

/// Pure-value form of the snapshot bound.
pub fn snapshot_value<T: Scalar>(lambda: T, t0: T) -> LsEstimate<T> {
    assert!(t0 >= T::zero());
    let value = lambda / (T::of(4.0) * lambda * t0 + T::of(2.0));
    LsEstimate::lower(
        LsKind::Alpha2,
        value,
        LsMethod::SnapshotBound,
        "fixed-time 2->4 hypercontractivity snapshot",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{random_pauli_channel, PauliDistribution};

    #[test]
    fn depolarizing_qubit_bounds_collapse() {
        let l = Liouvillian::<f64>::depolarizing(2);
        let s = sandwich_bounds(&l).unwrap();
        assert!(s.reversible);
        assert!((s.alpha2_lower.value - 1.0).abs() < 1e-10);
        assert!((s.alpha2_upper.value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn depolarizing_d4_bracket() {
        let l = Liouvillian::<f64>::depolarizing(4);
        let s = sandwich_bounds(&l).unwrap();
        let expect_low = 2.0 * (1.0 - 0.5) / 3.0f64.ln();
        assert!((s.alpha2_lower.value - expect_low).abs() < 1e-10);
        assert!((expect_low - 0.9102).abs() < 1e-4);
        assert!((s.alpha2_upper.value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn tensor_bound_values() {
        let b = depolarizing_tensor_bound::<f64>(2);
        assert!((b.value - 0.22656).abs() < 1e-4, "d = 2 bound {}", b.value);

        let l = Liouvillian::<f64>::depolarizing(2);
        let tb = tensor_lower_bound(&l).unwrap();
        assert!((tb.lower.value - b.value).abs() < 1e-12, "unit gap reproduces the pure bound");
        assert!((tb.qubit_exact.as_ref().unwrap().value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn tensor_bound_below_single_site_constant() {
        // The tensor-stable bound never exceeds the single-site closed form.
        for d in 3..=16usize {
            let bound = depolarizing_tensor_bound::<f64>(d).value;
            let single = depolarizing_alpha2::<f64>(d);
            assert!(bound <= single + 1e-12, "d = {d}: {bound} vs {single}");
        }
    }

    #[test]
    fn tensor_bound_rejects_non_primitive() {
        let p = PauliDistribution::new(0.5f64, 0.0, 0.0).unwrap();
        let l = Liouvillian::from_channel(&random_pauli_channel(&p));
        assert!(matches!(tensor_lower_bound(&l), Err(Error::NotPrimitive(_))));
    }

    #[test]
    fn snapshot_values() {
        // lambda = 1, t0 = (log 3)^2 / 2 reproduces the depolarizing tensor bound.
        let t0 = 3.0f64.ln().powi(2) / 2.0;
        let v: f64 = snapshot_value(1.0, t0).value;
        assert!((v - 0.22656).abs() < 1e-4);
        // t0 -> 0 limit is 1/2.
        assert!((snapshot_value(1.0f64, 0.0).value - 0.5).abs() < 1e-15);
        // Monotone decreasing in t0.
        let mut prev = f64::INFINITY;
        for k in 0..10 {
            let v: f64 = snapshot_value(1.0, 0.3 * k as f64).value;
            assert!(v < prev);
            prev = v;
        }
    }

    #[test]
    fn snapshot_requires_reversibility() {
        let l = Liouvillian::<f64>::depolarizing(3);
        assert!(snapshot_bound(&l, 0.5).is_ok());

        // A generic mixed-unitary channel is not reversible.
        let mut rng = crate::sample::rng_from_seed(19);
        let t = crate::channels::random_doubly_stochastic_channel::<f64>(3, 3, &mut rng);
        let l = Liouvillian::from_channel(&t);
        assert!(matches!(snapshot_bound(&l, 0.5), Err(Error::NotReversible(_))));
    }

    #[test]
    fn tensor_bound_sits_below_tensor_power_estimates() {
        // The tensor-stable lower bound must stay below any feasible
        // variational value of alpha_2(L^(2)), for qubit and qutrit sites.
        use crate::ls::{alpha2_variational, VariationalOptions};
        for (d, seed) in [(2usize, 21u64), (3, 22)] {
            let mut rng = crate::sample::rng_from_seed(seed);
            let l = crate::channels::random_reversible_liouvillian::<f64>(d, 3, &mut rng);
            let tb = match tensor_lower_bound(&l) {
                Ok(tb) => tb,
                Err(_) => continue,
            };
            let l2 = l.tensor_power(2).unwrap();
            let est = alpha2_variational(&l2, &VariationalOptions::with_restarts(4), seed)
                .unwrap()
                .value;
            assert!(
                tb.lower.value <= est + 1e-9,
                "d = {d}: tensor bound {} above two-copy estimate {est}",
                tb.lower.value
            );
            if let Some(exact) = &tb.qubit_exact {
                // Qubit tensor stability: the two-copy estimate reaches the gap.
                assert!(est >= exact.value - 1e-3, "estimate {est} vs gap {}", exact.value);
            }
        }
    }
}
