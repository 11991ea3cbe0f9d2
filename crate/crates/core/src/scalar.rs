//! Exact scalar values: arbitrary-precision rationals and the extended
//! rationals (`ℚ ∪ {−∞}`) used for degrees and growth exponents.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Exact rational number. `BigRational` keeps the invariants we need:
/// reduced fraction, positive denominator.
pub type Rational = BigRational;

/// Build a rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Build a rational from a numerator/denominator pair.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical text form of a rational: `p` or `p/q`.
pub fn rat_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A rational number or `−∞`, totally ordered with `−∞` below everything.
///
/// This is the value type of every degree and every growth exponent in the
/// crate. Addition absorbs: `−∞ + r = −∞`.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum ExtRational {
    NegInfinity,
    Finite(Rational),
}

impl ExtRational {
    pub fn zero() -> Self {
        ExtRational::Finite(Rational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        ExtRational::Finite(rat_int(n))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        ExtRational::Finite(rat(num, den))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRational::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            ExtRational::NegInfinity => None,
        }
    }

    /// Absorbing addition: `−∞` plus anything is `−∞`.
    pub fn add(&self, other: &ExtRational) -> ExtRational {
        match (self, other) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => ExtRational::Finite(a + b),
            _ => ExtRational::NegInfinity,
        }
    }

    pub fn add_rat(&self, other: &Rational) -> ExtRational {
        match self {
            ExtRational::Finite(a) => ExtRational::Finite(a + other),
            ExtRational::NegInfinity => ExtRational::NegInfinity,
        }
    }

    /// Multiplicative inverse of a finite nonzero value.
    pub fn recip(&self) -> Option<ExtRational> {
        match self {
            ExtRational::Finite(r) if !r.is_zero() => Some(ExtRational::Finite(r.recip())),
            _ => None,
        }
    }

    /// Scale by a positive rational; `−∞` is fixed.
    pub fn scale(&self, factor: &Rational) -> ExtRational {
        assert!(factor.is_positive(), "scale factor must be positive");
        match self {
            ExtRational::Finite(r) => ExtRational::Finite(r * factor),
            ExtRational::NegInfinity => ExtRational::NegInfinity,
        }
    }

    pub fn min(self, other: ExtRational) -> ExtRational {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: ExtRational) -> ExtRational {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Compare against a finite rational.
    pub fn cmp_rat(&self, r: &Rational) -> Ordering {
        match self {
            ExtRational::NegInfinity => Ordering::Less,
            ExtRational::Finite(v) => v.cmp(r),
        }
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtRational::NegInfinity, ExtRational::NegInfinity) => Ordering::Equal,
            (ExtRational::NegInfinity, _) => Ordering::Less,
            (_, ExtRational::NegInfinity) => Ordering::Greater,
            (ExtRational::Finite(a), ExtRational::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::NegInfinity => write!(f, "-inf"),
            ExtRational::Finite(r) => write!(f, "{}", rat_to_string(r)),
        }
    }
}

/// Order of vanishing: a non-negative integer, or `+∞` for the zero
/// polynomial. Kept separate from [`ExtRational`] on purpose; `+∞` only ever
/// appears here.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VanishingOrder {
    Finite(u64),
    PosInfinity,
}

impl VanishingOrder {
    pub fn as_finite(&self) -> Option<u64> {
        match self {
            VanishingOrder::Finite(k) => Some(*k),
            VanishingOrder::PosInfinity => None,
        }
    }
}

impl PartialOrd for VanishingOrder {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VanishingOrder {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (VanishingOrder::PosInfinity, VanishingOrder::PosInfinity) => Ordering::Equal,
            (VanishingOrder::PosInfinity, _) => Ordering::Greater,
            (_, VanishingOrder::PosInfinity) => Ordering::Less,
            (VanishingOrder::Finite(a), VanishingOrder::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for VanishingOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VanishingOrder::PosInfinity => write!(f, "+inf"),
            VanishingOrder::Finite(k) => write!(f, "{k}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neg_infinity_is_least() {
        assert!(ExtRational::NegInfinity < ExtRational::from_int(-1_000_000));
        assert!(ExtRational::from_ratio(-1, 2) < ExtRational::zero());
    }

    #[test]
    fn addition_absorbs() {
        let v = ExtRational::NegInfinity.add(&ExtRational::from_int(7));
        assert_eq!(v, ExtRational::NegInfinity);
        let w = ExtRational::from_int(2).add(&ExtRational::from_ratio(1, 2));
        assert_eq!(w, ExtRational::from_ratio(5, 2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(ExtRational::from_ratio(-4, 6).to_string(), "-2/3");
        assert_eq!(ExtRational::NegInfinity.to_string(), "-inf");
        assert_eq!(VanishingOrder::PosInfinity.to_string(), "+inf");
    }
}
