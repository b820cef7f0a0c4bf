//! Scalar trait bundles used by the generic matrix and polynomial types.
//!
//! The exact kernels instantiate these with `BigInt` / `BigRational`; the
//! rendering code uses `f64`. `Scalar` is the commutative-ring surface,
//! `FieldScalar` adds division.

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Display
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Scalars with exact or approximate division and a sign, enough for
/// Gaussian elimination with pivoting.
pub trait FieldScalar: Scalar + Signed + PartialOrd + Div<Output = Self> {}

impl<T> FieldScalar for T where T: Scalar + Signed + PartialOrd + Div<Output = T> {}
