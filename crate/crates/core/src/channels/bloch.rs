//! Bloch-sphere representation of doubly stochastic qubit channels.

use super::pauli::pauli_matrix;
use super::QuantumChannel;
use crate::error::{Error, Result};
use crate::linalg::{Hermitian, Mat};
use crate::scalar::Scalar;

/// The 3x3 real matrix representing a unital qubit channel on Bloch vectors,
/// `B[i][j] = tr(sigma_i T(sigma_j)) / 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlochMatrix<T> {
    entries: [[T; 3]; 3],
}

impl<T: Scalar> BlochMatrix<T> {
    pub fn entries(&self) -> &[[T; 3]; 3] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let e = &self.entries;
        BlochMatrix {
            entries: [
                [e[0][0], e[1][0], e[2][0]],
                [e[0][1], e[1][1], e[2][1]],
                [e[0][2], e[1][2], e[2][2]],
            ],
        }
    }

    /// `(B + B^T)/2`.
    pub fn symmetrized(&self) -> Self {
        let e = &self.entries;
        let half = T::of(0.5);
        let mut s = [[T::zero(); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                s[i][j] = (e[i][j] + e[j][i]) * half;
            }
        }
        BlochMatrix { entries: s }
    }

    fn as_complex(&self) -> Mat<T> {
        Mat::from_fn(3, 3, |i, j| num_complex::Complex::new(self.entries[i][j], T::zero()))
    }

    /// Eigenvalues of the symmetrized matrix, descending.
    pub fn symmetric_eigenvalues(&self) -> [T; 3] {
        let sym = self.symmetrized().as_complex();
        let dec = Hermitian::symmetrized(&sym).eig();
        [dec.eigenvalues[0], dec.eigenvalues[1], dec.eigenvalues[2]]
    }

    /// `sup_{|x|=1} <x, Bx>`: the largest eigenvalue of `(B + B^T)/2`. The
    /// antisymmetric part of `B` drops out of the real quadratic form.
    pub fn largest_quadratic_form_value(&self) -> T {
        self.symmetric_eigenvalues()[0]
    }

    /// Operator norm of the symmetrized matrix (largest eigenvalue magnitude).
    pub fn symmetrized_operator_norm(&self) -> T {
        let eigs = self.symmetric_eigenvalues();
        eigs.iter().fold(T::zero(), |m, &l| m.max(l.abs()))
    }

    pub fn max_abs_entry(&self) -> T {
        let mut m = T::zero();
        for row in &self.entries {
            for &v in row {
                m = m.max(v.abs());
            }
        }
        m
    }
}

/// Extract the Bloch matrix of a doubly stochastic qubit channel.
pub fn bloch_matrix<T: Scalar>(channel: &QuantumChannel<T>) -> Result<BlochMatrix<T>> {
    if channel.dim() != 2 {
        return Err(Error::NotQubit(channel.dim()));
    }
    let defect = channel.double_stochasticity_defect();
    if defect > T::of(1e-10) {
        return Err(Error::NotDoublyStochastic(defect.to_f64().unwrap_or(f64::NAN)));
    }
    let sigmas: Vec<Mat<T>> = (1..=3).map(pauli_matrix).collect();
    let images: Vec<Mat<T>> = sigmas.iter().map(|s| channel.apply(s)).collect();
    let half = T::of(0.5);
    let mut entries = [[T::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let tr = (&sigmas[i] * &images[j]).trace();
            debug_assert!(tr.im.abs() < T::of(1e-9), "Bloch entries must be real");
            entries[i][j] = tr.re * half;
        }
    }
    Ok(BlochMatrix { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{random_doubly_stochastic_channel, random_pauli_channel, PauliDistribution};
    use crate::sample::rng_from_seed;

    #[test]
    fn identity_channel_maps_to_identity() {
        let t = QuantumChannel::<f64>::identity(2);
        let b = bloch_matrix(&t).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((b.entries()[i][j] - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn completely_depolarizing_maps_to_zero() {
        let t = QuantumChannel::<f64>::completely_depolarizing(2);
        let b = bloch_matrix(&t).unwrap();
        assert!(b.max_abs_entry() < 1e-12);
    }

    #[test]
    fn symmetric_pauli_quarter_is_zero_matrix() {
        let p = PauliDistribution::new(0.25, 0.25, 0.25).unwrap();
        let t = random_pauli_channel(&p);
        let b = bloch_matrix(&t).unwrap();
        assert!(b.max_abs_entry() < 1e-12);
    }

    #[test]
    fn adjoint_channel_gives_transposed_bloch_matrix() {
        let mut rng = rng_from_seed(21);
        let t = random_doubly_stochastic_channel::<f64>(2, 3, &mut rng);
        let b = bloch_matrix(&t).unwrap();
        let badj = bloch_matrix(&t.adjoint()).unwrap();
        let bt = b.transpose();
        for i in 0..3 {
            for j in 0..3 {
                assert!((badj.entries()[i][j] - bt.entries()[i][j]).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn rejects_wrong_dimension() {
        let t = QuantumChannel::<f64>::identity(3);
        assert!(matches!(bloch_matrix(&t), Err(Error::NotQubit(3))));
    }
}
