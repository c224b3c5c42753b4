//! Random channel and generator instances for verification sweeps.

use num_complex::Complex;
use rand::Rng;

use super::{Liouvillian, QuantumChannel};
use crate::linalg::Mat;
use crate::sample::{dirichlet_uniform, haar_unitary};
use crate::scalar::Scalar;

/// Mixed-unitary channel `sum_i q_i U_i rho U_i^dag` with Haar-random
/// unitaries and uniform simplex weights. Doubly stochastic by construction.
pub fn random_doubly_stochastic_channel<T: Scalar>(
    d: usize,
    k: usize,
    rng: &mut impl Rng,
) -> QuantumChannel<T> {
    assert!(k >= 1, "need at least one unitary");
    let weights = dirichlet_uniform::<T>(k, rng);
    let kraus: Vec<Mat<T>> = weights
        .iter()
        .map(|&q| haar_unitary::<T>(d, rng).scale(Complex::new(q.sqrt(), T::zero())))
        .collect();
    QuantumChannel::from_kraus(kraus).expect("mixed-unitary channels are trace preserving")
}

/// Reversible doubly stochastic generator `(T + T^*)/2 - id` built from a
/// random mixed-unitary channel.
pub fn random_reversible_liouvillian<T: Scalar>(
    d: usize,
    k: usize,
    rng: &mut impl Rng,
) -> Liouvillian<T> {
    let t = random_doubly_stochastic_channel::<T>(d, k, rng);
    let mut kraus = Vec::with_capacity(2 * t.kraus().len());
    let half = Complex::new(T::of(0.5).sqrt(), T::zero());
    for op in t.kraus() {
        kraus.push(op.scale(half));
        kraus.push(op.dagger().scale(half));
    }
    let sym = QuantumChannel::from_kraus(kraus).expect("symmetrized mixture is trace preserving");
    Liouvillian::from_channel(&sym)
}
