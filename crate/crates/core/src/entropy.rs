//! Scalar functionals: entropies, relative entropy, 2-entropy, Dirichlet
//! forms, variance and the entropy-production rate.
//!
//! Natural logarithm throughout.

use crate::channels::Liouvillian;
use crate::error::{Error, Result};
use crate::linalg::{schatten_norm, Density, Hermitian, Mat};
use crate::scalar::Scalar;

/// Eigenvalue clamp for logarithms of PSD matrices (`0 log 0 = 0` convention).
pub const LOG_CLAMP: f64 = 1e-14;

/// A computed functional with a name tag and an input fingerprint, for
/// reporting.
#[derive(Clone, Debug, PartialEq)]
pub struct FunctionalValue {
    pub functional: &'static str,
    pub value: f64,
    pub input_hash: u64,
}

impl FunctionalValue {
    pub fn new<T: Scalar>(functional: &'static str, value: T, inputs: &[&Mat<T>]) -> Self {
        FunctionalValue {
            functional,
            value: value.to_f64().unwrap_or(f64::NAN),
            input_hash: fingerprint(inputs),
        }
    }
}

/// FNV-1a over the bit patterns of the input entries.
fn fingerprint<T: Scalar>(inputs: &[&Mat<T>]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |bits: u64| {
        h ^= bits;
        h = h.wrapping_mul(0x100000001b3);
    };
    for m in inputs {
        eat(m.rows() as u64);
        for z in m.data() {
            eat(z.re.to_f64().unwrap_or(f64::NAN).to_bits());
            eat(z.im.to_f64().unwrap_or(f64::NAN).to_bits());
        }
    }
    h
}

/// Von Neumann entropy `S(rho) = -tr(rho log rho)` with `0 log 0 = 0`.
pub fn von_neumann_entropy<T: Scalar>(rho: &Density<T>) -> T {
    let clamp = T::of(LOG_CLAMP);
    rho.probabilities()
        .iter()
        .fold(T::zero(), |acc, &p| if p <= clamp { acc } else { acc - p * p.ln() })
}

/// Relative entropy `D(rho || sigma) = tr[rho (log rho - log sigma)]` when
/// `supp(rho)` is contained in `supp(sigma)`, `+inf` otherwise.
pub fn relative_entropy<T: Scalar>(rho: &Density<T>, sigma: &Density<T>) -> T {
    assert_eq!(rho.dim(), sigma.dim(), "states must share a dimension");
    let support_eps = T::of(1e-12);
    let sig = sigma.hermitian().eig();

    // rho-weight on sigma's numerical kernel.
    let mut kernel_weight = T::zero();
    for (k, &s) in sig.eigenvalues.iter().enumerate() {
        if s >= support_eps {
            continue;
        }
        let v = sig.eigenvector(k);
        let rv = rho.mat().mul_vec(&v);
        let w = v
            .iter()
            .zip(rv.iter())
            .fold(num_complex::Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                acc + a.conj() * *b
            });
        kernel_weight += w.re;
    }
    if kernel_weight > T::of(1e-10) {
        return T::infinity();
    }

    let clamp = T::of(LOG_CLAMP);
    let tr_rho_log_rho = -von_neumann_entropy(rho);
    // tr[rho log sigma] in sigma's eigenbasis, with clamped kernel directions
    // contributing nothing (their rho-weight passed the support test).
    let mut tr_rho_log_sigma = T::zero();
    for (k, &s) in sig.eigenvalues.iter().enumerate() {
        if s <= clamp {
            continue;
        }
        let v = sig.eigenvector(k);
        let rv = rho.mat().mul_vec(&v);
        let w = v
            .iter()
            .zip(rv.iter())
            .fold(num_complex::Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                acc + a.conj() * *b
            });
        tr_rho_log_sigma += w.re * s.ln();
    }
    (tr_rho_log_rho - tr_rho_log_sigma).max(T::zero())
}

/// Relative entropy to the maximally mixed state, `log d - S(rho)`.
pub fn relative_entropy_to_mixed<T: Scalar>(rho: &Density<T>) -> T {
    T::of(rho.dim() as f64).ln() - von_neumann_entropy(rho)
}

/// Pinsker slack `D(rho || sigma) - ||rho - sigma||_1^2 / 2`, nonnegative up
/// to numerics.
pub fn pinsker_gap<T: Scalar>(rho: &Density<T>, sigma: &Density<T>) -> Result<T> {
    let div = relative_entropy(rho, sigma);
    if div == T::infinity() {
        return Err(Error::InfiniteDivergence);
    }
    let dist = schatten_norm(&(rho.mat() - sigma.mat()), T::one())?;
    Ok(div - T::of(0.5) * dist * dist)
}

/// 2-Dirichlet form `E^2_L(X) = -tr[L(X) X] / d` for Hermitian `X`.
pub fn dirichlet_form_2<T: Scalar>(l: &Liouvillian<T>, x: &Hermitian<T>) -> T {
    let d = T::of(l.dim() as f64);
    let lx = l.apply(x.mat());
    let tr = (&lx * x.mat()).trace();
    debug_assert!(
        tr.im.abs() <= T::of(1e-8) * (T::one() + tr.re.abs()),
        "Dirichlet form must be real"
    );
    -tr.re / d
}

/// 2-Dirichlet form written directly on a precomputed superoperator.
pub(crate) fn dirichlet_form_2_superop<T: Scalar>(superop: &Mat<T>, x: &Mat<T>) -> T {
    let d = T::of(x.rows() as f64);
    let v = x.vec();
    let sv = superop.mul_vec(&v);
    let quad = v
        .iter()
        .zip(sv.iter())
        .fold(num_complex::Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * *b);
    -quad.re / d
}

/// 2-entropy `Ent_2(X) = tr[X^2 (log(X^2 / tr X^2) + log d)] / (2d)` for
/// strictly positive `X`.
pub fn entropy_2<T: Scalar>(x: &Hermitian<T>) -> Result<T> {
    let eigs = x.eig().eigenvalues;
    let min = eigs.last().copied().unwrap_or_else(T::zero);
    if min < T::of(1e-12) {
        return Err(Error::NotPositive(min.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(entropy_2_from_eigs(&eigs, x.dim()))
}

/// 2-entropy from the eigenvalues of `X` alone (used by the optimizers, which
/// parametrize `X = exp(H)` and already know the spectrum).
pub(crate) fn entropy_2_from_eigs<T: Scalar>(eigs: &[T], d: usize) -> T {
    let dd = T::of(d as f64);
    let sq: Vec<T> = eigs.iter().map(|&x| x * x).collect();
    let total = sq.iter().fold(T::zero(), |s, &v| s + v);
    let log_total = total.ln();
    let mut acc = T::zero();
    for (&x, &x2) in eigs.iter().zip(sq.iter()) {
        if x2 <= T::of(LOG_CLAMP) {
            continue;
        }
        acc += x2 * (T::of(2.0) * x.abs().ln() - log_total + dd.ln());
    }
    acc / (T::of(2.0) * dd)
}

/// Variance with respect to the maximally mixed state,
/// `||Y - tr(Y) 1/d||^2_{2, 1/d} = (tr Y^2 - (tr Y)^2 / d) / d`.
pub fn variance<T: Scalar>(y: &Hermitian<T>) -> T {
    let d = T::of(y.dim() as f64);
    let m = y.mat();
    let tr = m.trace().re;
    let tr_sq = (m * m).trace().re;
    ((tr_sq - tr * tr / d) / d).max(T::zero())
}

/// Entropy-production rate `tr[L(rho) log rho]` for full-rank `rho`.
pub fn entropy_production_rate<T: Scalar>(l: &Liouvillian<T>, rho: &Density<T>) -> Result<T> {
    let min = rho.min_eigenvalue();
    if min < T::of(1e-10) {
        return Err(Error::Singular(min.to_f64().unwrap_or(f64::NAN)));
    }
    let log_rho = rho.hermitian().apply(|x| x.ln())?;
    let lrho = l.apply(rho.mat());
    let tr = (&lrho * log_rho.mat()).trace();
    Ok(tr.re)
}
