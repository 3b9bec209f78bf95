use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Coefficient field for polynomials, determinants and linear solves.
///
/// Implemented for the exact [`BigRational`](num_rational::BigRational) and for the
/// IEEE floats. Only the rational instantiation is used where results are
/// certified; the float instantiations serve the numeric verification layer.
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn from_i64(n: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Sign as -1, 0 or +1.
    fn signum_i8(&self) -> i8 {
        if self.is_zero() {
            0
        } else if *self > Self::zero() {
            1
        } else {
            -1
        }
    }
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_i64(n: i64) -> Self {
        n as f32
    }

    fn to_f64(&self) -> f64 {
        *self as f64
    }
}
