//! Pauli matrices and random Pauli channels.

use num_complex::Complex;

use super::QuantumChannel;
use crate::error::{Error, Result};
use crate::linalg::{cplx, Mat};
use crate::scalar::Scalar;

/// Pauli matrix by index: 0 -> identity, 1 -> sigma_x, 2 -> sigma_y,
/// 3 -> sigma_z.
pub fn pauli_matrix<T: Scalar>(index: usize) -> Mat<T> {
    let mut m = Mat::zeros(2, 2);
    match index {
        0 => {
            m[(0, 0)] = cplx(1.0, 0.0);
            m[(1, 1)] = cplx(1.0, 0.0);
        }
        1 => {
            m[(0, 1)] = cplx(1.0, 0.0);
            m[(1, 0)] = cplx(1.0, 0.0);
        }
        2 => {
            m[(0, 1)] = cplx(0.0, -1.0);
            m[(1, 0)] = cplx(0.0, 1.0);
        }
        3 => {
            m[(0, 0)] = cplx(1.0, 0.0);
            m[(1, 1)] = cplx(-1.0, 0.0);
        }
        _ => panic!("Pauli index must be 0..=3"),
    }
    m
}

/// Probability weights `(p1, p2, p3)` of the three Pauli conjugations; the
/// identity keeps weight `1 - p1 - p2 - p3`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PauliDistribution<T> {
    pub p1: T,
    pub p2: T,
    pub p3: T,
}

impl<T: Scalar> PauliDistribution<T> {
    pub fn new(p1: T, p2: T, p3: T) -> Result<Self> {
        for (name, v) in [("p1", p1), ("p2", p2), ("p3", p3)] {
            if v < T::zero() || !v.is_finite() {
                return Err(Error::InvalidDistribution(format!(
                    "{name} = {} must be a nonnegative real",
                    v.to_f64().unwrap_or(f64::NAN)
                )));
            }
        }
        let sum = p1 + p2 + p3;
        if sum > T::one() + T::of(1e-12) {
            return Err(Error::InvalidDistribution(format!(
                "p1 + p2 + p3 = {} exceeds 1",
                sum.to_f64().unwrap_or(f64::NAN)
            )));
        }
        Ok(PauliDistribution { p1, p2, p3 })
    }

    pub fn identity_weight(&self) -> T {
        (T::one() - self.p1 - self.p2 - self.p3).max(T::zero())
    }

    pub fn as_array(&self) -> [T; 3] {
        [self.p1, self.p2, self.p3]
    }

    /// Superoperator spectrum `{1, 1-2(p1+p2), 1-2(p2+p3), 1-2(p1+p3)}` of the
    /// induced channel, as the eigenvalues on `1, sigma_3, sigma_1, sigma_2`.
    pub fn channel_spectrum(&self) -> [T; 4] {
        let two = T::of(2.0);
        [
            T::one(),
            T::one() - two * (self.p1 + self.p2),
            T::one() - two * (self.p2 + self.p3),
            T::one() - two * (self.p1 + self.p3),
        ]
    }

    /// Distribution of the composite `T^* T = T^2` obtained by Kraus algebra:
    /// `q_k = sum_{i xor j = k} p_i p_j` over the Pauli group labels.
    pub fn composite_with_adjoint(&self) -> PauliDistribution<T> {
        let p = [self.identity_weight(), self.p1, self.p2, self.p3];
        let two = T::of(2.0);
        PauliDistribution {
            p1: two * (p[0] * p[1] + p[2] * p[3]),
            p2: two * (p[0] * p[2] + p[1] * p[3]),
            p3: two * (p[0] * p[3] + p[1] * p[2]),
        }
    }
}

/// The random Pauli channel `rho -> sum p_i sigma_i rho sigma_i`.
pub fn random_pauli_channel<T: Scalar>(p: &PauliDistribution<T>) -> QuantumChannel<T> {
    let weights = [p.identity_weight(), p.p1, p.p2, p.p3];
    let order = [0usize, 1, 2, 3];
    let kraus: Vec<Mat<T>> = order
        .iter()
        .map(|&i| pauli_matrix::<T>(i).scale(Complex::new(weights[i].sqrt(), T::zero())))
        .collect();
    QuantumChannel::from_kraus(kraus).expect("Pauli weights sum to one")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_distribution_gives_identity_channel() {
        let p = PauliDistribution::new(0.0, 0.0, 0.0).unwrap();
        let t = random_pauli_channel(&p);
        let id = QuantumChannel::<f64>::identity(2);
        assert!((t.superop() - id.superop()).max_abs() < 1e-14);
    }

    #[test]
    fn symmetric_quarter_distribution_has_rank_one_spectrum() {
        let p = PauliDistribution::new(0.25, 0.25, 0.25).unwrap();
        let t = random_pauli_channel(&p);
        let mut mags: Vec<f64> = t.spectrum().iter().map(|z| z.norm()).collect();
        mags.sort_by(|a, b| b.partial_cmp(a).unwrap());
        assert!((mags[0] - 1.0).abs() < 1e-12);
        for m in &mags[1..] {
            assert!(*m < 1e-12, "expected spectrum {{1, 0, 0, 0}}, got magnitude {m}");
        }
        // Formula route agrees.
        let formula = p.channel_spectrum();
        assert_eq!(formula, [1.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn half_x_distribution_is_not_primitive() {
        let p = PauliDistribution::new(0.5, 0.0, 0.0).unwrap();
        let t = random_pauli_channel(&p);
        // Spectrum {1, 0, 1, 0}: two magnitude-1 eigenvalues.
        let (prim, witness) = t.is_primitive().unwrap();
        assert!(!prim);
        assert_eq!(witness.len(), 2);
        let formula = p.channel_spectrum();
        assert_eq!(formula, [1.0, 0.0, 1.0, 0.0]);
    }

    #[test]
    fn spectrum_formula_matches_superoperator() {
        let p = PauliDistribution::new(0.1, 0.25, 0.3).unwrap();
        let t = random_pauli_channel(&p);
        let mut from_superop: Vec<f64> = t.spectrum().iter().map(|z| z.re).collect();
        let mut from_formula = p.channel_spectrum().to_vec();
        from_superop.sort_by(|a, b| b.partial_cmp(a).unwrap());
        from_formula.sort_by(|a, b| b.partial_cmp(a).unwrap());
        for (a, b) in from_superop.iter().zip(from_formula.iter()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn composite_matches_kraus_composition() {
        let p = PauliDistribution::new(0.1, 0.25, 0.3).unwrap();
        let t = random_pauli_channel(&p);
        let composed = t.adjoint().compose(&t).unwrap();
        let q = p.composite_with_adjoint();
        let direct = random_pauli_channel(&q);
        assert!((composed.superop() - direct.superop()).max_abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_distributions() {
        assert!(PauliDistribution::new(-0.1, 0.2, 0.2).is_err());
        assert!(PauliDistribution::new(0.5, 0.4, 0.2).is_err());
    }
}
