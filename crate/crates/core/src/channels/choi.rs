//! Choi-matrix plumbing: superoperator <-> Choi reshuffle and canonical Kraus
//! recovery through the Choi eigendecomposition.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{Hermitian, Mat};
use crate::scalar::Scalar;

/// Choi matrix `C = sum_k vec(K_k) vec(K_k)^dag` from the superoperator
/// `S = sum_k conj(K_k) (x) K_k`. Pure index reshuffle:
/// `C[(i*d + k, j*d + l)] = S[(l*d + k, j*d + i)]`.
pub fn choi_from_superop<T: Scalar>(s: &Mat<T>, d: usize) -> Mat<T> {
    debug_assert_eq!(s.rows(), d * d);
    Mat::from_fn(d * d, d * d, |row, col| {
        let (i, k) = (row / d, row % d);
        let (j, l) = (col / d, col % d);
        s[(l * d + k, j * d + i)]
    })
}

/// Kraus operators from a superoperator via the Choi spectral decomposition.
///
/// Eigenvalues in `[-1e-10, 0)` are clamped to zero; anything below `-1e-8`
/// signals a map that is not completely positive.
pub fn kraus_from_superop<T: Scalar>(s: &Mat<T>, d: usize) -> Result<Vec<Mat<T>>> {
    let choi = choi_from_superop(s, d);
    let herm = Hermitian::new(choi).map_err(|_| Error::NotCp(f64::NAN))?;
    let dec = herm.eig();
    let mut kraus = Vec::new();
    for (idx, &mu) in dec.eigenvalues.iter().enumerate() {
        if mu < -T::of(1e-8) {
            return Err(Error::NotCp(mu.to_f64().unwrap_or(f64::NAN)));
        }
        if mu <= T::of(1e-12) {
            continue; // clamped to zero
        }
        let w = dec.eigenvector(idx);
        let root = mu.sqrt();
        let k = Mat::from_fn(d, d, |i, j| w[j * d + i] * Complex::new(root, T::zero()));
        kraus.push(k);
    }
    Ok(kraus)
}

/// Superoperator `sum_k conj(K_k) (x) K_k` of a Kraus list.
pub fn superop_from_kraus<T: Scalar>(kraus: &[Mat<T>], d: usize) -> Mat<T> {
    let mut s = Mat::zeros(d * d, d * d);
    for k in kraus {
        s = &s + &k.conj().kron(k);
    }
    s
}
