//! Error type shared by all modules.

use thiserror::Error;

/// Everything that can go wrong when building objects or computing constants.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max asymmetry {0:.3e})")]
    NonHermitian(f64),
    #[error("matrix function undefined at eigenvalue {0:.6e}")]
    Domain(f64),
    #[error("Schatten/weighted norm requires p >= 1, got {0}")]
    InvalidP(f64),
    #[error("matrix norm {0:.3e} exceeds the exponential cap {1:.3e}")]
    Overflow(f64, f64),
    #[error("Choi matrix has eigenvalue {0:.3e} < -1e-8; map is not completely positive")]
    NotCp(f64),
    #[error("operation requires a qubit channel (d = 2), got d = {0}")]
    NotQubit(usize),
    #[error("channel is not doubly stochastic (deviation {0:.3e})")]
    NotDoublyStochastic(f64),
    #[error("matrix is not unitary (deviation {0:.3e})")]
    NotUnitary(f64),
    #[error("invalid Pauli distribution: {0}")]
    InvalidDistribution(String),
    #[error("dimension {0} exceeds the superoperator cap {1}")]
    DimensionCap(usize, usize),
    #[error("generator is not primitive ({0} peripheral eigenvalues)")]
    NotPrimitive(usize),
    #[error("composite map T*T is not primitive ({0} peripheral eigenvalues)")]
    NotPrimitiveComposite(usize),
    #[error("generator is not reversible (||L - L*|| = {0:.3e})")]
    NotReversible(f64),
    #[error("matrix is not strictly positive (min eigenvalue {0:.3e})")]
    NotPositive(f64),
    #[error("state is singular (min eigenvalue {0:.3e}); full rank required")]
    Singular(f64),
    #[error("relative entropy is infinite (support violation)")]
    InfiniteDivergence,
    #[error("hypercontractivity exponent q = {0} outside [2, 2 + 2*alpha_D]")]
    QOutOfRange(f64),
    #[error("certified entropy bound violated at t = {t} (entropy {entropy:.6e} < bound {bound:.6e})")]
    BoundViolation { t: f64, entropy: f64, bound: f64 },
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("basis element {index} is not an eigenvector (residual {residual:.3e})")]
    NotEigenbasis { index: usize, residual: f64 },
    #[error("invalid density matrix: {0}")]
    InvalidDensity(String),
    #[error("invalid input in {field}: {message}")]
    InvalidInput { field: String, message: String },
    #[error("JSON parse error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
