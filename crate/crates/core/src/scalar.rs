//! Scalar abstraction for the numeric kernels.

use num_traits::float::FloatConst;
use num_traits::{Float, FromPrimitive};
use std::fmt::{Debug, Display, LowerExp};
use std::ops::{AddAssign, DivAssign, MulAssign, RemAssign, SubAssign};

/// Floating-point scalar the kernels are generic over.
///
/// `f32` and `f64` both implement it. Accuracy contracts throughout the crate
/// (for example the 1e-12 relative bound on [`crate::numerics::log_gamma`])
/// are stated for `f64`; narrower types degrade proportionally to their
/// precision.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + RemAssign
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Lossless-by-construction conversion from an `f64` literal.
    ///
    /// Panics only if the target type cannot represent any finite `f64`
    /// approximation, which none of the supported types do.
    fn from_f64_lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal must convert into the scalar type")
    }

    /// Conversion from a `usize` index or count.
    fn from_usize_lit(v: usize) -> Self {
        Self::from_usize(v).expect("usize must convert into the scalar type")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_conversions_hold_for_both_widths() {
        assert_eq!(f64::from_f64_lit(0.5), 0.5);
        assert_eq!(f32::from_f64_lit(0.5), 0.5f32);
        assert_eq!(f64::from_usize_lit(100_000), 1.0e5);
    }
}
