//! Coefficient fields.
//!
//! Every structure in the crate is generic over a [`Scalar`], an exact field
//! built on the `num-traits` numeric tower. The canonical choice is
//! [`Rat`] (arbitrary precision rationals); [`Rat64`] is available for quick
//! experiments where coefficient growth is known to stay small.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Signed, ToPrimitive, Zero};

/// Arbitrary precision rational numbers.
pub type Rat = BigRational;

/// Fixed width rationals. Arithmetic panics on overflow.
pub type Rat64 = Ratio<i64>;

/// An exact coefficient field.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + Debug + Display + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self;

    /// Builds `num/den`; `None` if `den == 0` or the value does not fit.
    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self>;

    /// Reduced numerator and positive denominator.
    fn to_fraction(&self) -> (BigInt, BigInt);

    fn is_integral(&self) -> bool {
        self.to_fraction().1.is_one()
    }

    fn is_negative_value(&self) -> bool {
        self.to_fraction().0.is_negative()
    }
}

impl Scalar for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(BigRational::new(num.clone(), den.clone()))
    }

    fn to_fraction(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
}

impl Scalar for Ratio<i64> {
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Ratio::new(num.to_i64()?, den.to_i64()?))
    }

    fn to_fraction(&self) -> (BigInt, BigInt) {
        (BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }
}

/// `(-1)^k` in the field.
pub fn sign<S: Scalar>(k: usize) -> S {
    if k.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fractions_are_reduced() {
        let r = Rat::from_fraction(&BigInt::from(6), &BigInt::from(-4)).unwrap();
        assert_eq!(r.to_fraction(), (BigInt::from(-3), BigInt::from(2)));
        assert!(Rat::from_fraction(&BigInt::from(1), &BigInt::from(0)).is_none());
        assert_eq!(format!("{}", r), "-3/2");
        assert!(r.is_negative_value());
        assert!(!r.is_integral());
    }

    #[test]
    fn fixed_width_round_trip() {
        let r = Rat64::from_fraction(&BigInt::from(2), &BigInt::from(4)).unwrap();
        assert_eq!(r, Ratio::new(1, 2));
        let big = BigInt::from(i64::MAX) * 4;
        assert!(Rat64::from_fraction(&big, &BigInt::from(1)).is_none());
        assert_eq!(sign::<Rat64>(3), Rat64::from_int(-1));
    }
}
