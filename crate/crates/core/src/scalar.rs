//! Scalar abstraction shared by every score-carrying type.
//!
//! All scores, correlations and percentages are computed through [`Scalar`],
//! so the same pipeline runs in `f32` or `f64`. The crate root exposes
//! `f64` aliases for the common case.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::num::ParseFloatError;
use std::str::FromStr;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point type usable for lexicon scores and statistics.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + FromStr<Err = ParseFloatError>
    + Display
    + Debug
    + Default
    + Sum
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` literal; every literal used by this crate is exactly
    /// representable or has a nearest value in both `f32` and `f64`.
    fn lit(value: f64) -> Self;

    fn from_count(n: usize) -> Self;

    fn as_f64(self) -> f64;
}

macro_rules! impl_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            #[inline]
            fn lit(value: f64) -> Self {
                value as $t
            }

            #[inline]
            fn from_count(n: usize) -> Self {
                n as $t
            }

            #[inline]
            fn as_f64(self) -> f64 {
                self as f64
            }
        }
    };
}

impl_scalar!(f32);
impl_scalar!(f64);

/// Exact ratio `num / den` rounded once into `S`.
///
/// Both operands are integers, so the only rounding is the final division.
#[inline]
pub fn ratio<S: Scalar>(num: i64, den: usize) -> S {
    S::from_i64(num).expect("i64 converts to float") / S::from_count(den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_rounds_once() {
        assert_eq!(ratio::<f64>(29, 11), 29.0 / 11.0);
        assert_eq!(ratio::<f32>(8, 10), 0.8f32);
        assert_eq!(ratio::<f64>(-3, 1), -3.0);
    }
}
