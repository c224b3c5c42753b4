//! Derivative-free simplex descent (Nelder-Mead) used by the variational
//! constant estimators and the norm maximizers.
//!
//! Objectives may return `+inf` to reject an iterate; the simplex then moves
//! away from the rejected region.

use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug)]
pub struct SimplexOptions<T> {
    /// Hard iteration cap per run.
    pub max_iters: usize,
    /// Stop when the best value improves by less than `stall_tol` over this
    /// many consecutive iterations.
    pub stall_iters: usize,
    pub stall_tol: T,
    /// Edge length of the initial axis-aligned simplex.
    pub initial_step: T,
}

impl<T: Scalar> Default for SimplexOptions<T> {
    fn default() -> Self {
        SimplexOptions {
            max_iters: 2000,
            stall_iters: 50,
            stall_tol: T::of(1e-10),
            initial_step: T::of(0.25),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SimplexOutcome<T> {
    pub best_point: Vec<T>,
    pub best_value: T,
    pub iterations: usize,
    pub evaluations: usize,
}

/// Minimize `f` starting from `x0`.
pub fn nelder_mead<T: Scalar>(
    f: impl Fn(&[T]) -> T,
    x0: &[T],
    opts: &SimplexOptions<T>,
) -> SimplexOutcome<T> {
    let n = x0.len();
    assert!(n >= 1, "need at least one parameter");
    let mut evals = 0usize;
    let mut eval = |x: &[T]| {
        evals += 1;
        let v = f(x);
        if v.is_nan() {
            T::infinity()
        } else {
            v
        }
    };

    // Initial simplex: x0 plus axis steps.
    let mut simplex: Vec<(Vec<T>, T)> = Vec::with_capacity(n + 1);
    let v0 = eval(x0);
    simplex.push((x0.to_vec(), v0));
    for i in 0..n {
        let mut p = x0.to_vec();
        p[i] += opts.initial_step;
        let v = eval(&p);
        simplex.push((p, v));
    }

    let alpha = T::one(); // reflection
    let gamma = T::of(2.0); // expansion
    let rho = T::of(0.5); // contraction
    let sigma = T::of(0.5); // shrink

    let mut best_seen = simplex
        .iter()
        .map(|s| s.1)
        .fold(T::infinity(), |a, b| a.min(b));
    let mut stall_anchor = best_seen;
    let mut stall_count = 0usize;
    let mut iterations = 0usize;

    for _ in 0..opts.max_iters {
        iterations += 1;
        simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());

        // Centroid of all but the worst vertex.
        let mut centroid = vec![T::zero(); n];
        for (p, _) in simplex.iter().take(n) {
            for (c, &x) in centroid.iter_mut().zip(p.iter()) {
                *c += x;
            }
        }
        let inv = T::one() / T::of(n as f64);
        for c in centroid.iter_mut() {
            *c *= inv;
        }

        let worst = simplex[n].clone();
        let reflected: Vec<T> = centroid
            .iter()
            .zip(worst.0.iter())
            .map(|(&c, &w)| c + alpha * (c - w))
            .collect();
        let fr = eval(&reflected);

        if fr < simplex[0].1 {
            // Try to expand.
            let expanded: Vec<T> = centroid
                .iter()
                .zip(worst.0.iter())
                .map(|(&c, &w)| c + gamma * (c - w))
                .collect();
            let fe = eval(&expanded);
            simplex[n] = if fe < fr { (expanded, fe) } else { (reflected, fr) };
        } else if fr < simplex[n - 1].1 {
            simplex[n] = (reflected, fr);
        } else {
            // Contract (outside if the reflection helped at all, else inside).
            let toward = if fr < worst.1 { &reflected } else { &worst.0 };
            let contracted: Vec<T> = centroid
                .iter()
                .zip(toward.iter())
                .map(|(&c, &w)| c + rho * (w - c))
                .collect();
            let fc = eval(&contracted);
            if fc < worst.1.min(fr) {
                simplex[n] = (contracted, fc);
            } else {
                // Shrink toward the best vertex.
                let best = simplex[0].0.clone();
                for entry in simplex.iter_mut().skip(1) {
                    let p: Vec<T> = best
                        .iter()
                        .zip(entry.0.iter())
                        .map(|(&b, &x)| b + sigma * (x - b))
                        .collect();
                    let v = eval(&p);
                    *entry = (p, v);
                }
            }
        }

        let round_best = simplex
            .iter()
            .map(|s| s.1)
            .fold(T::infinity(), |a, b| a.min(b));
        best_seen = best_seen.min(round_best);

        stall_count += 1;
        if stall_anchor - best_seen > opts.stall_tol {
            stall_anchor = best_seen;
            stall_count = 0;
        } else if stall_count >= opts.stall_iters {
            break;
        }
    }

    simplex.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
    let (best_point, best_value) = simplex.swap_remove(0);
    SimplexOutcome { best_point, best_value, iterations, evaluations: evals }
}
