//! Exponential upper bound on the storage rate of a quantum memory under
//! Markovian noise with interleaved unitary corrections.

use crate::channels::Liouvillian;
use crate::error::Result;
use crate::ls::tensor_lower_bound;
use crate::scalar::Scalar;

/// Which tensor-stable constant drives the decay exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CapacityAlpha {
    /// The dimension-generic tensor-stable lower bound.
    TensorBound,
    /// The exact qubit value (the spectral gap); only valid for d = 2.
    QubitExact,
}

/// Table of `e^{-2 t alpha} log d` values bounding the achievable rate.
#[derive(Clone, Debug)]
pub struct CapacityBound<T> {
    pub dim: usize,
    pub lambda: T,
    pub alpha: T,
    pub rows: Vec<(T, T)>,
}

/// Evaluate the capacity bound on a time grid.
pub fn capacity_bound<T: Scalar>(
    l: &Liouvillian<T>,
    ts: &[T],
    choice: CapacityAlpha,
) -> Result<CapacityBound<T>> {
    let tb = tensor_lower_bound(l)?;
    let alpha = match choice {
        CapacityAlpha::TensorBound => tb.lower.value,
        CapacityAlpha::QubitExact => {
            tb.qubit_exact
                .as_ref()
                .ok_or_else(|| crate::error::Error::NotQubit(l.dim()))?
                .value
        }
    };
    let log_d = T::of(l.dim() as f64).ln();
    let rows = ts
        .iter()
        .map(|&t| {
            assert!(t >= T::zero(), "capacity bound needs nonnegative times");
            (t, (-T::of(2.0) * alpha * t).exp() * log_d)
        })
        .collect();
    Ok(CapacityBound { dim: l.dim(), lambda: tb.lambda, alpha, rows })
}
