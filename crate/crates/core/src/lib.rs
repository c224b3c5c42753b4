//! Log-Sobolev constants, spectral gaps and entropy-production bounds for
//! doubly stochastic quantum channels and Markovian semigroups.

pub mod error;
pub mod linalg;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Working precision for the CLI and the concrete aliases below.
pub type Real = f64;

/// Dense complex matrix at working precision.
pub type CMat = linalg::Mat<Real>;
/// Validated Hermitian matrix at working precision.
pub type CHermitian = linalg::Hermitian<Real>;
/// Validated density matrix at working precision.
pub type CDensity = linalg::Density<Real>;

pub mod channels;
pub mod capacity;
pub mod discrete;
pub mod entropy;
pub mod group;
pub mod ls;
pub mod io;
pub mod normopt;
pub mod report;
pub mod verify;
pub mod optimize;
pub mod sample;

/// Cap rayon's global thread pool from the `QLS_THREADS` environment
/// variable (default: all available cores). Safe to call more than once;
/// only the first initialization wins.
pub fn init_thread_pool_from_env() {
    if let Ok(value) = std::env::var("QLS_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
            }
        }
    }
}
