//! Scalar abstraction: exact rationals or IEEE 754 doubles.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Arbitrary-precision rational scalar.
pub type Rat = BigRational;

/// Scalar kinds the tensor machinery is generic over.
///
/// `EXACT` distinguishes arithmetic with no rounding (rationals) from
/// `f64`. Exact scalars compare against literal zero; floats carry the
/// relative tolerances from [`crate::tol`].
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn abs(&self) -> Self;
    fn to_f64(&self) -> f64;

    /// Exact square root when one exists in the scalar domain.
    ///
    /// For rationals this succeeds only on perfect squares; for `f64` it
    /// succeeds on any non-negative value.
    fn sqrt_checked(&self) -> Option<Self>;

    /// Relative zero test: exact scalars ignore the tolerance, floats
    /// compare `|self| <= rel * max(scale, 1)`.
    fn approx_zero(&self, scale: &Self, rel: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.to_f64().abs() <= rel * scale.to_f64().abs().max(1.0)
        }
    }

    fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_int(p) / Self::from_int(q)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn sqrt_checked(&self) -> Option<Self> {
        if *self >= 0.0 {
            Some(self.sqrt())
        } else {
            None
        }
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn from_int(n: i64) -> Self {
        Rat::from_integer(BigInt::from(n))
    }
    fn is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn to_f64(&self) -> f64 {
        num::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn sqrt_checked(&self) -> Option<Self> {
        if Signed::is_negative(self) {
            return None;
        }
        let ns = self.numer().sqrt();
        let ds = self.denom().sqrt();
        if &ns * &ns == *self.numer() && &ds * &ds == *self.denom() {
            Some(Rat::new(ns, ds))
        } else {
            None
        }
    }
}

/// Maximum of |x| over a slice, used for relative tolerance scales.
pub fn max_abs<S: Scalar>(values: &[S]) -> S {
    let mut m = S::zero();
    for v in values {
        let a = v.abs();
        if a > m {
            m = a;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_sqrt_perfect_square() {
        let x = Rat::from_ratio(36, 25);
        assert_eq!(x.sqrt_checked(), Some(Rat::from_ratio(6, 5)));
        assert_eq!(Rat::from_int(2).sqrt_checked(), None);
        assert_eq!(Rat::from_int(-4).sqrt_checked(), None);
        assert_eq!(Rat::from_int(0).sqrt_checked(), Some(<Rat as Scalar>::zero()));
    }

    #[test]
    fn approx_zero_modes() {
        let tiny = 1e-12_f64;
        assert!(tiny.approx_zero(&1.0, 1e-9));
        assert!(!0.1_f64.approx_zero(&1.0, 1e-9));
        // exact scalars ignore tolerance entirely
        let one = <Rat as Scalar>::one();
        assert!(!Rat::from_ratio(1, 1_000_000_000).approx_zero(&one, 1e-3));
    }
}
