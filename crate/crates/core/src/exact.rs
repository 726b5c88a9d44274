//! Exact signed integers for determinant values.
//!
//! The fast path is a checked `i128`; any overflow escalates to a heap
//! big integer. Values are kept canonical: the big representation is only
//! used for values that do not fit in `i128`, so equality and ordering
//! never have to reconcile two encodings of the same number.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact arbitrary-magnitude signed integer.
#[derive(Clone, Debug)]
pub enum ExactInt {
    /// Fits in a machine word pair; the common case for every workload here.
    Small(i128),
    /// Escalated representation. Invariant: the value does not fit in `i128`.
    Big(BigInt),
}

use ExactInt::{Big, Small};

impl ExactInt {
    pub const ZERO: ExactInt = Small(0);
    pub const ONE: ExactInt = Small(1);

    /// Canonicalize: demote a `Big` that fits back into the small path.
    fn normalized(value: BigInt) -> ExactInt {
        match value.to_i128() {
            Some(v) => Small(v),
            None => Big(value),
        }
    }

    pub fn from_bigint(value: BigInt) -> ExactInt {
        Self::normalized(value)
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Small(v) => BigInt::from(*v),
            Big(v) => v.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Small(0))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Small(v) => *v < 0,
            Big(v) => v.is_negative(),
        }
    }

    pub fn is_even(&self) -> bool {
        match self {
            Small(v) => v % 2 == 0,
            Big(v) => (v % 2u8).is_zero(),
        }
    }

    pub fn abs(&self) -> ExactInt {
        match self {
            Small(v) => match v.checked_abs() {
                Some(a) => Small(a),
                None => Big(-BigInt::from(*v)),
            },
            Big(v) => Self::normalized(v.abs()),
        }
    }

    /// Exact quotient. Panics if `rhs` is zero or does not divide `self`.
    pub fn div_exact(&self, rhs: &ExactInt) -> ExactInt {
        if let (Small(a), Small(b)) = (self, rhs) {
            assert!(*b != 0, "division by zero");
            debug_assert!(a % b == 0, "inexact division {a}/{b}");
            return Small(a / b);
        }
        let (a, b) = (self.to_bigint(), rhs.to_bigint());
        assert!(!b.is_zero(), "division by zero");
        debug_assert!((&a % &b).is_zero(), "inexact division");
        Self::normalized(a / b)
    }

    pub fn is_multiple_of(&self, divisor: &ExactInt) -> bool {
        if divisor.is_zero() {
            return self.is_zero();
        }
        match (self, divisor) {
            (Small(a), Small(b)) => a % b == 0,
            _ => (self.to_bigint() % divisor.to_bigint()).is_zero(),
        }
    }

    /// `self` raised to a non-negative power.
    pub fn pow(&self, exp: u32) -> ExactInt {
        match self {
            Small(v) => match v.checked_pow(exp) {
                Some(r) => Small(r),
                None => Self::normalized(BigInt::from(*v).pow(exp)),
            },
            Big(v) => Self::normalized(v.pow(exp)),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Small(v) => i64::try_from(*v).ok(),
            Big(_) => None,
        }
    }
}

impl Default for ExactInt {
    fn default() -> Self {
        Self::ZERO
    }
}

impl From<i64> for ExactInt {
    fn from(v: i64) -> Self {
        Small(v as i128)
    }
}

impl From<i128> for ExactInt {
    fn from(v: i128) -> Self {
        Small(v)
    }
}

impl From<u64> for ExactInt {
    fn from(v: u64) -> Self {
        Small(v as i128)
    }
}

impl FromStr for ExactInt {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(v) = s.parse::<i128>() {
            return Ok(Small(v));
        }
        Ok(Self::normalized(s.parse::<BigInt>()?))
    }
}

impl PartialEq for ExactInt {
    fn eq(&self, other: &Self) -> bool {
        // Canonical representation: equal values share a variant.
        match (self, other) {
            (Small(a), Small(b)) => a == b,
            (Big(a), Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for ExactInt {}

impl Ord for ExactInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Small(a), Small(b)) => a.cmp(b),
            (Big(a), Big(b)) => a.cmp(b),
            // A Big value lies strictly outside the i128 range.
            (Small(_), Big(b)) => {
                if b.is_negative() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (Big(a), Small(_)) => {
                if a.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

impl PartialOrd for ExactInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::hash::Hash for ExactInt {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        // Canonical representation keeps this consistent with Eq.
        match self {
            Small(v) => {
                0u8.hash(state);
                v.hash(state);
            }
            Big(v) => {
                1u8.hash(state);
                v.hash(state);
            }
        }
    }
}

impl fmt::Display for ExactInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Small(v) => write!(f, "{v}"),
            Big(v) => write!(f, "{v}"),
        }
    }
}

impl Neg for ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        match self {
            Small(v) => match v.checked_neg() {
                Some(r) => Small(r),
                None => Big(-BigInt::from(v)),
            },
            Big(v) => ExactInt::normalized(-v),
        }
    }
}

impl Neg for &ExactInt {
    type Output = ExactInt;
    fn neg(self) -> ExactInt {
        self.clone().neg()
    }
}

impl Add for &ExactInt {
    type Output = ExactInt;
    fn add(self, rhs: &ExactInt) -> ExactInt {
        if let (Small(a), Small(b)) = (self, rhs) {
            if let Some(r) = a.checked_add(*b) {
                return Small(r);
            }
        }
        ExactInt::normalized(self.to_bigint() + rhs.to_bigint())
    }
}

impl Sub for &ExactInt {
    type Output = ExactInt;
    fn sub(self, rhs: &ExactInt) -> ExactInt {
        if let (Small(a), Small(b)) = (self, rhs) {
            if let Some(r) = a.checked_sub(*b) {
                return Small(r);
            }
        }
        ExactInt::normalized(self.to_bigint() - rhs.to_bigint())
    }
}

impl Mul for &ExactInt {
    type Output = ExactInt;
    fn mul(self, rhs: &ExactInt) -> ExactInt {
        if let (Small(a), Small(b)) = (self, rhs) {
            if let Some(r) = a.checked_mul(*b) {
                return Small(r);
            }
        }
        ExactInt::normalized(self.to_bigint() * rhs.to_bigint())
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident, $method:ident);*) => {$(
        impl $trait for ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: ExactInt) -> ExactInt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ExactInt> for ExactInt {
            type Output = ExactInt;
            fn $method(self, rhs: &ExactInt) -> ExactInt {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add, add; Sub, sub; Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic() {
        let a = ExactInt::from(7i64);
        let b = ExactInt::from(-3i64);
        assert_eq!(&a + &b, ExactInt::from(4i64));
        assert_eq!(&a - &b, ExactInt::from(10i64));
        assert_eq!(&a * &b, ExactInt::from(-21i64));
        assert_eq!(-a, ExactInt::from(-7i64));
    }

    #[test]
    fn overflow_escalates_and_stays_canonical() {
        let big = ExactInt::from(i128::MAX);
        let two = ExactInt::from(2i64);
        let doubled = &big * &two;
        assert!(matches!(doubled, Big(_)));
        // Coming back into range demotes to the small variant.
        let back = doubled.div_exact(&two);
        assert!(matches!(back, Small(_)));
        assert_eq!(back, big);
    }

    #[test]
    fn ordering_across_variants() {
        let huge = ExactInt::from(i128::MAX).pow(3);
        let tiny = -&huge;
        let zero = ExactInt::ZERO;
        assert!(tiny < zero);
        assert!(zero < huge);
        assert!(tiny < huge);
    }

    #[test]
    fn parity_and_divisibility() {
        assert!(ExactInt::from(-4i64).is_even());
        assert!(!ExactInt::from(7i64).is_even());
        assert!(ExactInt::from(-12i64).is_multiple_of(&ExactInt::from(4i64)));
        assert!(!ExactInt::from(-12i64).is_multiple_of(&ExactInt::from(5i64)));
        assert!(ExactInt::ZERO.is_multiple_of(&ExactInt::from(3i64)));
    }

    #[test]
    fn pow_and_display() {
        assert_eq!(ExactInt::from(9i64).pow(0), ExactInt::ONE);
        assert_eq!(ExactInt::from(3i64).pow(9).to_string(), "19683");
        let n64 = ExactInt::from(64i64).pow(32);
        assert_eq!(n64, "6277101735386680763835789423207666416102355444464034512896".parse().unwrap());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-1", "123456789012345678901234567890123456789012"] {
            let v: ExactInt = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
    }
}
