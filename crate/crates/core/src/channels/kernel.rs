//! Classical Markov kernels induced by measuring a channel in a rotated basis.

use num_complex::Complex;

use super::QuantumChannel;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::scalar::Scalar;

/// A doubly stochastic real matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassicalKernel<T> {
    dim: usize,
    matrix: Vec<T>,
}

impl<T: Scalar> ClassicalKernel<T> {
    /// Validate entries `>= -1e-12` and row/column sums within 1e-10 of 1.
    pub fn new(dim: usize, matrix: Vec<T>) -> Result<Self> {
        if matrix.len() != dim * dim {
            return Err(Error::DimMismatch(matrix.len(), dim * dim));
        }
        for (idx, &v) in matrix.iter().enumerate() {
            if v < -T::of(1e-12) {
                return Err(Error::InvalidInput {
                    field: format!("matrix[{}][{}]", idx / dim, idx % dim),
                    message: format!("negative entry {}", v.to_f64().unwrap_or(f64::NAN)),
                });
            }
        }
        for i in 0..dim {
            let row: T = (0..dim).fold(T::zero(), |s, j| s + matrix[i * dim + j]);
            let col: T = (0..dim).fold(T::zero(), |s, j| s + matrix[j * dim + i]);
            if (row - T::one()).abs() > T::of(1e-10) {
                return Err(Error::InvalidInput {
                    field: format!("row {i}"),
                    message: format!("sum {} != 1", row.to_f64().unwrap_or(f64::NAN)),
                });
            }
            if (col - T::one()).abs() > T::of(1e-10) {
                return Err(Error::InvalidInput {
                    field: format!("column {i}"),
                    message: format!("sum {} != 1", col.to_f64().unwrap_or(f64::NAN)),
                });
            }
        }
        Ok(ClassicalKernel { dim, matrix })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> T {
        self.matrix[i * self.dim + j]
    }

    pub fn entries(&self) -> &[T] {
        &self.matrix
    }
}

/// The kernel `(M_U)_{ij} = <j| U^dag T(U |i><i| U^dag) U |j>`.
pub fn markov_kernel<T: Scalar>(
    channel: &QuantumChannel<T>,
    u: &Mat<T>,
) -> Result<ClassicalKernel<T>> {
    let d = channel.dim();
    if u.rows() != d || u.cols() != d {
        return Err(Error::DimMismatch(u.rows(), d));
    }
    let unitarity = (&(u.dagger() * u.clone()) - &Mat::identity(d)).max_abs();
    if unitarity > T::of(1e-10) {
        return Err(Error::NotUnitary(unitarity.to_f64().unwrap_or(f64::NAN)));
    }
    let defect = channel.double_stochasticity_defect();
    if defect > T::of(1e-10) {
        return Err(Error::NotDoublyStochastic(defect.to_f64().unwrap_or(f64::NAN)));
    }

    let udag = u.dagger();
    let mut matrix = vec![T::zero(); d * d];
    for i in 0..d {
        // U |i><i| U^dag is the outer product of column i of U.
        let col: Vec<Complex<T>> = (0..d).map(|r| u[(r, i)]).collect();
        let proj = Mat::from_fn(d, d, |r, c| col[r] * col[c].conj());
        let rotated = &(&udag * &channel.apply(&proj)) * u;
        for j in 0..d {
            let z = rotated[(j, j)];
            if z.im.abs() > T::of(1e-10) {
                return Err(Error::InvalidInput {
                    field: format!("M[{i}][{j}]"),
                    message: format!("imaginary part {:.3e}", z.im.to_f64().unwrap_or(f64::NAN)),
                });
            }
            matrix[i * d + j] = z.re;
        }
    }
    ClassicalKernel::new(d, matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channels::{random_pauli_channel, PauliDistribution};
    use crate::sample::{haar_unitary, rng_from_seed};

    #[test]
    fn identity_channel_gives_identity_kernel() {
        let t = QuantumChannel::<f64>::identity(3);
        let mut rng = rng_from_seed(4);
        let u = haar_unitary::<f64>(3, &mut rng);
        let k = markov_kernel(&t, &u).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j { 1.0 } else { 0.0 };
                assert!((k.entry(i, j) - expect).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn depolarizing_channel_gives_flat_kernel() {
        let t = QuantumChannel::<f64>::completely_depolarizing(4);
        let mut rng = rng_from_seed(5);
        let u = haar_unitary::<f64>(4, &mut rng);
        let k = markov_kernel(&t, &u).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert!((k.entry(i, j) - 0.25).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn pauli_kernel_in_computational_basis() {
        // For U = 1: M = [[1-a, a], [a, 1-a]] with a = p1 + p2.
        let p = PauliDistribution::new(0.15, 0.25, 0.4).unwrap();
        let t = random_pauli_channel(&p);
        let k = markov_kernel(&t, &Mat::identity(2)).unwrap();
        let a: f64 = 0.15 + 0.25;
        assert!((k.entry(0, 1) - a).abs() < 1e-12);
        assert!((k.entry(1, 0) - a).abs() < 1e-12);
        assert!((k.entry(0, 0) - (1.0 - a)).abs() < 1e-12);
    }

    #[test]
    fn kernel_is_doubly_stochastic_for_random_inputs() {
        let mut rng = rng_from_seed(6);
        for d in [2usize, 3] {
            let t = crate::channels::random_doubly_stochastic_channel::<f64>(d, 3, &mut rng);
            let u = haar_unitary::<f64>(d, &mut rng);
            // `new` would reject a non doubly stochastic kernel.
            let k = markov_kernel(&t, &u).unwrap();
            assert_eq!(k.dim(), d);
        }
    }

    #[test]
    fn rejects_non_unitary_basis() {
        let t = QuantumChannel::<f64>::identity(2);
        let mut u = Mat::identity(2);
        u[(0, 0)] = crate::linalg::cplx(0.5, 0.0);
        assert!(matches!(markov_kernel(&t, &u), Err(Error::NotUnitary(_))));
    }
}
