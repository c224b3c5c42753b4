//! Dense complex linear algebra: matrices, spectral decompositions, matrix
//! functions, exponentials and Schatten norms.

mod eig;
mod expm;
mod mat;
mod norms;

pub use eig::{eig_hermitian, eigenvalues, hermitian_tol, Density, Hermitian, SpectralDecomp};
pub use expm::{expm, qr, solve, EXPM_NORM_CAP};
pub use mat::{cplx, Mat};
pub use norms::{operator_norm, schatten_norm, singular_values, weighted_lp_norm};

use crate::error::Result;
use crate::scalar::Scalar;

/// Apply a real function to a Hermitian matrix through its spectrum.
pub fn matrix_function<T: Scalar>(a: &Hermitian<T>, f: impl Fn(T) -> T) -> Result<Hermitian<T>> {
    a.apply(f)
}

/// Matrix logarithm of a positive semidefinite Hermitian matrix with the
/// `0 log 0 = 0` convention: eigenvalues below `clamp` are sent to zero.
pub fn log_psd_clamped<T: Scalar>(a: &Hermitian<T>, clamp: T) -> Mat<T> {
    let dec = a.eig();
    let vals: Vec<T> = dec
        .eigenvalues
        .iter()
        .map(|&l| if l <= clamp { T::zero() } else { l.ln() })
        .collect();
    dec.recompose_with(&vals)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_log_roundtrip_on_psd() {
        // Fixed positive definite 3x3.
        let mut a = Mat::<f64>::zeros(3, 3);
        a[(0, 0)] = cplx(2.0, 0.0);
        a[(1, 1)] = cplx(1.0, 0.0);
        a[(2, 2)] = cplx(0.5, 0.0);
        a[(0, 1)] = cplx(0.2, 0.3);
        a[(1, 0)] = cplx(0.2, -0.3);
        a[(1, 2)] = cplx(-0.1, 0.1);
        a[(2, 1)] = cplx(-0.1, -0.1);
        let h = Hermitian::new(a.clone()).unwrap();
        let exp = matrix_function(&h, |x| x.exp()).unwrap();
        let back = matrix_function(&exp, |x| x.ln()).unwrap();
        assert!((back.mat() - &a).max_abs() < 1e-9);
    }

    #[test]
    fn schatten2_squared_is_eigenvalue_sum() {
        let mut a = Mat::<f64>::zeros(3, 3);
        a[(0, 0)] = cplx(1.5, 0.0);
        a[(1, 1)] = cplx(-0.5, 0.0);
        a[(2, 2)] = cplx(0.25, 0.0);
        a[(0, 2)] = cplx(0.4, -0.2);
        a[(2, 0)] = cplx(0.4, 0.2);
        let h = Hermitian::new(a.clone()).unwrap();
        let sum: f64 = h.eig().eigenvalues.iter().map(|l| l * l).sum();
        let n2 = schatten_norm(&a, 2.0).unwrap();
        assert!((n2 * n2 - sum).abs() < 1e-10);
    }
}
