//! Maximization of weighted output/input norm ratios over positive
//! semidefinite inputs, parametrized as `X = A^dag A`.
//!
//! The reported value is a feasible evaluation, hence a lower estimate of the
//! true supremum.

use num_complex::Complex;
use rayon::prelude::*;

use crate::linalg::{weighted_lp_norm, Mat};
use crate::optimize::{nelder_mead, SimplexOptions};
use crate::sample::substream;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct NormRatioOutcome<T: Scalar> {
    /// Best ratio found (lower estimate of the supremum).
    pub value: T,
    /// The PSD input achieving it, normalized to `||X||_{2,1/d} = 1`.
    pub argmax: Mat<T>,
    pub restarts: usize,
    pub iterations: usize,
}

/// Maximize `||map(X)||_{q, 1/d} / ||X||_{2, 1/d}` over PSD `X` in `M_d`.
pub fn max_psd_norm_ratio<T, F>(
    apply: F,
    d: usize,
    q: T,
    restarts: usize,
    seed: u64,
) -> NormRatioOutcome<T>
where
    T: Scalar,
    F: Fn(&Mat<T>) -> Mat<T> + Sync,
{
    let objective = |params: &[T]| -> T {
        let x = psd_from_params(params, d);
        let in_norm = weighted_lp_norm(&x, T::of(2.0)).expect("p = 2 is valid");
        if in_norm < T::of(1e-9) {
            return T::infinity();
        }
        let out = apply(&x);
        let out_norm = weighted_lp_norm(&out, q).expect("q >= 2 is valid");
        -(out_norm / in_norm)
    };

    let runs: Vec<(T, Vec<T>, usize)> = (0..restarts.max(1))
        .into_par_iter()
        .map(|r| {
            let x0: Vec<T> = if r == 0 {
                // The identity witnesses ratio 1 for trace-preserving maps.
                params_from_matrix(&Mat::identity(d))
            } else if r == 1 {
                // Rank-one corner.
                let mut a = Mat::zeros(d, d);
                a[(0, 0)] = Complex::new(T::one(), T::zero());
                params_from_matrix(&a)
            } else {
                let mut rng = substream(seed, r as u64);
                crate::sample::gaussian_matrix::<T>(d, &mut rng)
                    .data()
                    .iter()
                    .flat_map(|z| [z.re, z.im])
                    .collect()
            };
            let opts = SimplexOptions { max_iters: 3000, ..SimplexOptions::default() };
            let out = nelder_mead(objective, &x0, &opts);
            (out.best_value, out.best_point, out.iterations)
        })
        .collect();

    let mut best_value = T::infinity();
    let mut best_point: Vec<T> = params_from_matrix(&Mat::identity(d));
    let mut iterations = 0usize;
    for (v, p, it) in runs {
        iterations += it;
        if v < best_value {
            best_value = v;
            best_point = p;
        }
    }
    let mut argmax = psd_from_params(&best_point, d);
    let norm = weighted_lp_norm(&argmax, T::of(2.0)).expect("p = 2 is valid");
    if norm > T::zero() {
        argmax = argmax.scale_re(T::one() / norm);
    }
    NormRatioOutcome { value: (-best_value).max(T::zero()), argmax, restarts, iterations }
}

fn psd_from_params<T: Scalar>(params: &[T], d: usize) -> Mat<T> {
    let a = matrix_from_params(params, d);
    (a.dagger() * a).hermitize()
}

fn matrix_from_params<T: Scalar>(params: &[T], d: usize) -> Mat<T> {
    debug_assert_eq!(params.len(), 2 * d * d);
    Mat::from_fn(d, d, |i, j| {
        let k = 2 * (i * d + j);
        Complex::new(params[k], params[k + 1])
    })
}

fn params_from_matrix<T: Scalar>(a: &Mat<T>) -> Vec<T> {
    a.data().iter().flat_map(|z| [z.re, z.im]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::QuantumChannel;

    #[test]
    fn identity_channel_ratio_grows_with_q() {
        // For the identity map, sup ||X||_{4,1/d} / ||X||_{2,1/d} over PSD X
        // is d^{1/4} at a rank-one projector.
        let d = 2;
        let outcome = max_psd_norm_ratio(|x: &Mat<f64>| x.clone(), d, 4.0, 8, 3);
        let expect = (d as f64).powf(0.25);
        assert!(
            (outcome.value - expect).abs() < 1e-4,
            "ratio {} vs d^(1/4) = {expect}",
            outcome.value
        );
    }

    #[test]
    fn q2_ratio_of_channel_is_one() {
        // Doubly stochastic channels contract the weighted 2-norm; the
        // supremum 1 is witnessed at X = 1.
        let t = QuantumChannel::<f64>::completely_depolarizing(2);
        let outcome = max_psd_norm_ratio(|x: &Mat<f64>| t.apply(x), 2, 2.0, 6, 4);
        assert!(outcome.value <= 1.0 + 1e-9);
        assert!(outcome.value >= 1.0 - 1e-6, "ratio {}", outcome.value);
    }
}
