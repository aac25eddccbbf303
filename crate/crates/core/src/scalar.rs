//! Scalar abstraction for the transform kernels.
//!
//! Everything in this crate is generic over [`Scalar`], which is a blanket
//! trait over `num_traits::Float`. In practice that means `f32` and `f64`;
//! the crate root exposes concrete aliases for both.

use core::fmt::{Debug, Display};
use core::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating-point scalar usable by the transforms.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Converts an `f64` constant into the scalar type.
    ///
    /// Constants (twiddle factors, normalization factors) are evaluated in
    /// `f64` and rounded once, so `f32` plans get correctly rounded tables.
    fn of(value: f64) -> Self {
        Self::from_f64(value).expect("constant not representable in scalar type")
    }

    /// Converts a count into the scalar type.
    fn of_usize(value: usize) -> Self {
        Self::from_usize(value).expect("count not representable in scalar type")
    }
}

impl<T> Scalar for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + AddAssign
        + SubAssign
        + MulAssign
        + DivAssign
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}
