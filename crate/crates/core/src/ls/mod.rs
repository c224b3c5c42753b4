//! Log-Sobolev constants and spectral gaps: closed forms, variational
//! estimates, certified bounds and entropy-production certificates.

mod bounds;
mod curve;
mod variational;

pub use bounds::{
    depolarizing_tensor_bound, sandwich_bounds, snapshot_bound, snapshot_value, tensor_lower_bound,
    SandwichBounds, TensorBound,
};
pub use curve::{comparison_check, entropy_production_curve, ComparisonReport, CurveRow};
pub use variational::{alpha1_variational, alpha2_variational, VariationalOptions};

use num_complex::Complex;

use crate::channels::{bloch_matrix, Liouvillian, QuantumChannel};
use crate::error::{Error, Result};
use crate::linalg::{Hermitian, Mat};
use crate::scalar::Scalar;

/// Which constant an estimate refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LsKind {
    Alpha1,
    Alpha2,
    Gap,
    AlphaD,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LsMethod {
    ClosedForm,
    Variational,
    SandwichBound,
    SnapshotBound,
    TensorBound,
}

/// Certified direction of an estimate. Variational minimizers evaluate the
/// true functional at feasible points, so their output can only sit above the
/// infimum: they are upper bounds. Lower bounds come only from theorems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Exact,
    Upper,
    Lower,
}

#[derive(Clone, Debug, Default)]
pub struct EstimateMeta {
    pub restarts: usize,
    pub iterations: usize,
    pub note: String,
}

/// A computed constant with its provenance.
#[derive(Clone, Debug)]
pub struct LsEstimate<T> {
    pub kind: LsKind,
    pub value: T,
    pub method: LsMethod,
    pub direction: Direction,
    pub meta: EstimateMeta,
}

impl<T: Scalar> LsEstimate<T> {
    pub fn exact(kind: LsKind, value: T, note: &str) -> Self {
        assert!(!note.is_empty(), "exact estimates must cite their closed form");
        LsEstimate {
            kind,
            value: value.max(T::zero()),
            method: LsMethod::ClosedForm,
            direction: Direction::Exact,
            meta: EstimateMeta { restarts: 0, iterations: 0, note: note.into() },
        }
    }

    pub fn upper(kind: LsKind, value: T, method: LsMethod, meta: EstimateMeta) -> Self {
        LsEstimate { kind, value: value.max(T::zero()), method, direction: Direction::Upper, meta }
    }

    pub fn lower(kind: LsKind, value: T, method: LsMethod, note: &str) -> Self {
        LsEstimate {
            kind,
            value: value.max(T::zero()),
            method,
            direction: Direction::Lower,
            meta: EstimateMeta { restarts: 0, iterations: 0, note: note.into() },
        }
    }
}

/// `2 (1 - 2/d) / log(d - 1)`, continuously extended by 1 at `d = 2`. This is
/// both the LS-2 constant of the depolarizing generator and the prefactor in
/// the gap sandwich.
pub fn depolarizing_alpha2<T: Scalar>(d: usize) -> T {
    assert!(d >= 2);
    if d == 2 {
        return T::one();
    }
    let dd = T::of(d as f64);
    T::of(2.0) * (T::one() - T::of(2.0) / dd) / (dd - T::one()).ln()
}

/// `(1 - 2/d) / log(d - 1)` with the same continuity convention (1/2 at d=2);
/// the discrete-time analogue of [`depolarizing_alpha2`].
pub fn half_prefactor<T: Scalar>(d: usize) -> T {
    depolarizing_alpha2::<T>(d) * T::of(0.5)
}

/// Smallest and largest eigenvalues of `-(L + L^*)/2` on the traceless
/// subspace and overall: `(gap, operator norm)`.
pub fn symmetrized_extremes<T: Scalar>(l: &Liouvillian<T>) -> (T, T) {
    let (block, _) = deflated_symmetrized_block(l);
    let dec = Hermitian::symmetrized(&block).eig();
    let gap = dec.eigenvalues.last().copied().unwrap_or_else(T::zero).max(T::zero());
    let full = Hermitian::symmetrized(&l.symmetrized_superop().scale_re(-T::one())).eig();
    let opnorm = full.eigenvalues.first().copied().unwrap_or_else(T::zero).max(T::zero());
    (gap, opnorm)
}

/// The matrix of `-(L + L^*)/2` restricted to the orthocomplement of the
/// fixed point `vec(1)/sqrt(d)`, together with the reflector used to build
/// the restriction basis.
fn deflated_symmetrized_block<T: Scalar>(l: &Liouvillian<T>) -> (Mat<T>, Mat<T>) {
    let d = l.dim();
    let n = d * d;
    let a = l.symmetrized_superop().scale_re(-T::one());
    // Householder reflector P with P e_0 = vec(1)/sqrt(d).
    let mut w: Vec<T> = vec![T::zero(); n];
    let inv_sqrt_d = T::one() / T::of(d as f64).sqrt();
    for i in 0..d {
        w[i * d + i] = -inv_sqrt_d;
    }
    w[0] += T::one(); // e0 - v
    let wnorm = w.iter().fold(T::zero(), |s, &x| s + x * x).sqrt();
    let p = if wnorm <= T::epsilon() {
        Mat::identity(n)
    } else {
        Mat::from_fn(n, n, |i, j| {
            let delta = if i == j { T::one() } else { T::zero() };
            Complex::new(delta - T::of(2.0) * w[i] * w[j] / (wnorm * wnorm), T::zero())
        })
    };
    let conj = &(&p * &a) * &p;
    let block = Mat::from_fn(n - 1, n - 1, |i, j| conj[(i + 1, j + 1)]);
    (block, p)
}

/// Hermitian unit-norm matrix spanning the slowest decaying direction of the
/// symmetrized generator (eigenvector at the spectral gap).
pub(crate) fn gap_direction<T: Scalar>(l: &Liouvillian<T>) -> Hermitian<T> {
    let d = l.dim();
    let n = d * d;
    let (block, p) = deflated_symmetrized_block(l);
    let dec = Hermitian::symmetrized(&block).eig();
    let k = dec.eigenvalues.len() - 1; // smallest eigenvalue of the block
    let u = dec.eigenvector(k);
    let mut full = vec![Complex::new(T::zero(), T::zero()); n];
    for (i, &ui) in u.iter().enumerate() {
        full[i + 1] = ui;
    }
    let rotated = p.mul_vec(&full);
    let y = Mat::unvec(&rotated, d);
    let herm = y.hermitize();
    let norm = herm.fro_norm();
    if norm <= T::epsilon() {
        // The gap eigenvector was anti-Hermitian; use the skew part instead
        // (multiplied by i it is Hermitian and spans the same decay rate).
        let skew = (&y - &y.dagger()).scale(Complex::new(T::zero(), T::of(0.5)));
        let norm = skew.fro_norm().max(T::epsilon());
        return Hermitian::symmetrized(&skew.scale_re(T::one() / norm));
    }
    Hermitian::symmetrized(&herm.scale_re(T::one() / norm))
}

/// Spectral gap of a doubly stochastic generator: the smallest eigenvalue of
/// `-(L + L^*)/2` on the traceless Hermitian subspace.
pub fn spectral_gap<T: Scalar>(l: &Liouvillian<T>) -> Result<LsEstimate<T>> {
    l.require_doubly_stochastic()?;
    let (gap, _) = symmetrized_extremes(l);
    Ok(LsEstimate::exact(LsKind::Gap, gap, "eigendecomposition of the symmetrized generator"))
}

/// Primitivity of a semigroup generator: exactly one superoperator eigenvalue
/// with real part `>= -1e-9` (the fixed point itself).
pub fn liouvillian_is_primitive<T: Scalar>(l: &Liouvillian<T>) -> Result<(bool, Vec<Complex<T>>)> {
    l.require_doubly_stochastic()?;
    let eigs = crate::linalg::eigenvalues(l.superop());
    let peripheral: Vec<Complex<T>> = eigs
        .into_iter()
        .filter(|z| z.re >= -T::of(1e-9))
        .collect();
    Ok((peripheral.len() == 1, peripheral))
}

fn require_qubit_primitive<T: Scalar>(t: &QuantumChannel<T>) -> Result<Liouvillian<T>> {
    if t.dim() != 2 {
        return Err(Error::NotQubit(t.dim()));
    }
    let l = Liouvillian::from_channel(t);
    let (prim, witness) = liouvillian_is_primitive(&l)?;
    if !prim {
        return Err(Error::NotPrimitive(witness.len()));
    }
    Ok(l)
}

/// Exact LS-2 constant of a primitive doubly stochastic qubit generator
/// `T - id`: `1 - sup_{|x|=1} <x, Bx>`, the supremum being the largest
/// eigenvalue of the symmetrized Bloch matrix.
///
/// Note the supremum of the quadratic form is the top *signed* eigenvalue,
/// not the norm; the two differ when a negative Bloch eigenvalue dominates
/// in magnitude, and only the eigenvalue version is consistent with the
/// qubit identity `alpha_2 = gap` and with the random-Pauli closed form.
pub fn alpha2_qubit<T: Scalar>(t: &QuantumChannel<T>) -> Result<LsEstimate<T>> {
    require_qubit_primitive(t)?;
    let b = bloch_matrix(t)?;
    let value = T::one() - b.largest_quadratic_form_value();
    Ok(LsEstimate::exact(LsKind::Alpha2, value, "qubit Bloch closed form"))
}

/// Exact LS-1 constant of a primitive doubly stochastic qubit generator
/// `T - id`: `1 - sup_{|x|=1} <x, Bx>`. The antisymmetric part of the Bloch
/// matrix drops out of the real quadratic form, so this coincides with
/// [`alpha2_qubit`]; for qubits the two constants agree.
pub fn alpha1_qubit<T: Scalar>(t: &QuantumChannel<T>) -> Result<LsEstimate<T>> {
    require_qubit_primitive(t)?;
    let b = bloch_matrix(t)?;
    let value = T::one() - b.largest_quadratic_form_value();
    Ok(LsEstimate::exact(LsKind::Alpha1, value, "qubit Bloch quadratic-form closed form"))
}
