//! Schatten p-norms and their 1/d-weighted counterparts.


use super::eig::Hermitian;
use super::mat::Mat;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Singular values of `A`, descending (square roots of the spectrum of
/// `A^dag A`, clamped at zero).
pub fn singular_values<T: Scalar>(a: &Mat<T>) -> Vec<T> {
    let gram = Hermitian::symmetrized(&(a.dagger() * a.clone()));
    gram.eig()
        .eigenvalues
        .iter()
        .map(|&l| l.max(T::zero()).sqrt())
        .collect()
}

/// Schatten p-norm `(sum s_i^p)^{1/p}`; `p = inf` gives the largest singular
/// value. Fails for `p < 1`.
pub fn schatten_norm<T: Scalar>(a: &Mat<T>, p: T) -> Result<T> {
    if p < T::one() {
        return Err(Error::InvalidP(p.to_f64().unwrap_or(f64::NAN)));
    }
    let s = singular_values(a);
    if p == T::infinity() {
        return Ok(s.first().copied().unwrap_or_else(T::zero));
    }
    if p == T::of(2.0) {
        // Frobenius shortcut; exact and cheap.
        return Ok(a.fro_norm());
    }
    let total = s.iter().fold(T::zero(), |acc, &x| acc + x.powf(p));
    Ok(total.powf(T::one() / p))
}

/// 1/d-weighted l_p norm `d^{-1/p} (tr |A|^p)^{1/p}`; `p = inf` coincides with
/// the Schatten infinity norm.
pub fn weighted_lp_norm<T: Scalar>(a: &Mat<T>, p: T) -> Result<T> {
    if p < T::one() {
        return Err(Error::InvalidP(p.to_f64().unwrap_or(f64::NAN)));
    }
    let d = T::of(a.rows() as f64);
    if p == T::infinity() {
        return schatten_norm(a, p);
    }
    Ok(d.powf(-T::one() / p) * schatten_norm(a, p)?)
}

/// Operator (spectral) norm.
pub fn operator_norm<T: Scalar>(a: &Mat<T>) -> T {
    schatten_norm(a, T::infinity()).expect("infinity is a valid exponent")
}
