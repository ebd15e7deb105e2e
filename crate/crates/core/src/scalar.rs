//! Scalar abstractions.
//!
//! Two layers: [`Field`] covers everything that only needs exact field
//! arithmetic (parameter ranges, closed-form coefficients, determinants) and
//! is implemented for `f32`, `f64` and arbitrary-precision rationals.
//! [`Real`] adds the floating point operations needed by the dense complex
//! linear algebra and is implemented for `f32` and `f64` only.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Float, FromPrimitive, Num, NumAssign, ToPrimitive};

/// Exact rational scalar used for closed-form checks.
pub type Rational = BigRational;

/// A totally ordered field: enough for rational functions of `(n, p)`.
pub trait Field: Clone + PartialOrd + Debug + Num + Neg<Output = Self> {
    fn from_int(v: i64) -> Self;

    /// Lossy conversion used for reporting.
    fn to_f64_lossy(&self) -> f64;

    fn abs_val(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn from_count(v: usize) -> Self {
        Self::from_int(v as i64)
    }
}

macro_rules! float_field {
    ($($t:ty),*) => {$(
        impl Field for $t {
            fn from_int(v: i64) -> Self {
                v as $t
            }
            fn to_f64_lossy(&self) -> f64 {
                *self as f64
            }
        }
    )*};
}
float_field!(f32, f64);

impl Field for Ratio<i64> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v)
    }
    fn to_f64_lossy(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
}

impl Field for BigRational {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(BigInt::from(v))
    }
    fn to_f64_lossy(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Floating point scalar for the matrix code (f32 or f64).
pub trait Real:
    Field + Float + FromPrimitive + NumAssign + Sum + Display + Default + Send + Sync + 'static
{
    /// Default absolute/relative comparison tolerance for this precision.
    fn default_tolerance() -> Self;

    fn from_f64_lossy(v: f64) -> Self {
        <Self as FromPrimitive>::from_f64(v).expect("finite f64 converts")
    }

    fn as_f64(self) -> f64 {
        Field::to_f64_lossy(&self)
    }
}

impl Real for f64 {
    fn default_tolerance() -> Self {
        1e-10
    }
}

impl Real for f32 {
    fn default_tolerance() -> Self {
        1e-4
    }
}

/// `a / b` for small integers, in any field.
pub fn ratio<F: Field>(a: i64, b: i64) -> F {
    F::from_int(a) / F::from_int(b)
}

/// Rational from a numerator/denominator pair.
pub fn rational(a: i64, b: i64) -> Rational {
    Ratio::new(BigInt::from(a), BigInt::from(b))
}

/// Best rational approximation of a decimal written with at most `digits` fractional digits.
pub fn rational_from_decimal(v: f64, digits: u32) -> Rational {
    let scale = 10i64.pow(digits);
    rational((v * scale as f64).round() as i64, scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_in_each_field() {
        assert_eq!(ratio::<f64>(1, 4), 0.25);
        assert_eq!(ratio::<f32>(-1, 2), -0.5);
        assert_eq!(ratio::<Rational>(2, 6), rational(1, 3));
        assert_eq!(ratio::<Ratio<i64>>(3, 9), Ratio::new(1, 3));
    }

    #[test]
    fn abs_val_matches_sign() {
        assert_eq!(rational(-3, 7).abs_val(), rational(3, 7));
        assert_eq!((-2.5f64).abs_val(), 2.5);
    }

    #[test]
    fn decimal_grid_points_are_exact() {
        assert_eq!(rational_from_decimal(-0.45, 2), rational(-9, 20));
        assert_eq!(rational_from_decimal(0.25, 2), rational(1, 4));
    }
}
