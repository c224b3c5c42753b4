//! Scalar abstraction for the real field underlying all complex arithmetic.
//!
//! Every numeric routine in this crate is generic over a [`Scalar`], so the
//! same code runs in `f32` or `f64`. The crate-root aliases pin `f64` as the
//! working precision; the stated tolerances assume it.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Real scalar type for matrix entries, eigenvalues and norms.
pub trait Scalar:
    Float + FloatConst + NumAssign + FromPrimitive + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Lift an `f64` constant (tolerances, closed-form coefficients) into `Self`.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("constant not representable in scalar type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_lift_to_both_widths() {
        assert_eq!(f64::of(0.5), 0.5);
        assert_eq!(f32::of(0.5), 0.5f32);
    }
}
