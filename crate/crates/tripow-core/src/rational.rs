//! Arbitrary-precision rational numbers, the scalar field for all inputs
//! and outputs.
//!
//! `Rational` wraps `num_rational::BigRational`, which already keeps the
//! canonical form: fully reduced, denominator positive, zero as 0/1. The
//! wrapper adds the strict text format used by the file formats, the
//! integer-power convention 0^0 = 1, and operation counting.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::iter::{Product, Sum};
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::opcount;

/// Exact fraction of arbitrary-precision integers.
///
/// Canonical form: `denominator > 0`, `gcd(|numerator|, denominator) = 1`,
/// zero is `0/1`. Equality and hashing are structural, which coincides
/// with numeric equality on the canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds the unique reduced form of `n / d` with a positive
    /// denominator.
    pub fn new(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let d = d.into();
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(n.into(), d)))
    }

    /// The integer `n` as a rational.
    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }

    /// Exact integer power with the convention 0^0 = 1.
    ///
    /// Negative exponents invert; 0 to a negative power is an error.
    pub fn pow(&self, e: i64) -> Result<Self> {
        opcount::bump();
        if self.is_zero() {
            return match e {
                0 => Ok(Rational::one()),
                _ if e > 0 => Ok(Rational::zero()),
                _ => Err(Error::ZeroToNegativePower),
            };
        }
        let exp = u32::try_from(e.unsigned_abs()).expect("exponent magnitude exceeds u32");
        let base = if e < 0 { self.0.recip() } else { self.0.clone() };
        let numer = base.numer().pow(exp);
        let denom = base.denom().pow(exp);
        // Canonical inputs stay canonical under powers; skip re-reduction.
        Ok(Rational(BigRational::new_raw(numer, denom)))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                opcount::bump();
                Rational((self.0).$method(rhs.0))
            }
        }

        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                opcount::bump();
                Rational((&self.0).$method(&rhs.0))
            }
        }

        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                opcount::bump();
                Rational((self.0).$method(&rhs.0))
            }
        }

        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                opcount::bump();
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        opcount::bump();
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        opcount::bump();
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

impl num_traits::Zero for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

impl num_traits::One for Rational {
    fn one() -> Self {
        Rational::one()
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
}

/// Canonical text form: `-59/2`, `7`. Integers omit the `/1`.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Parses the text format: optional leading minus, decimal digits, and an
/// optional `/digits` part. A Unicode minus sign is accepted alongside the
/// ASCII one. Anything else is rejected; round-tripping a canonical string
/// reproduces it exactly.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        let t = s.trim();
        let (negative, t) = match t.strip_prefix('-').or_else(|| t.strip_prefix('\u{2212}')) {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        let mut parts = t.splitn(2, '/');
        let numer_digits = parts.next().ok_or_else(bad)?;
        let denom_digits = parts.next();
        if numer_digits.is_empty() || !numer_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let mut numer = BigInt::from_radix_be(
            Sign::Plus,
            &numer_digits.bytes().map(|b| b - b'0').collect::<Vec<_>>(),
            10,
        )
        .ok_or_else(bad)?;
        if negative {
            numer = -numer;
        }
        let denom = match denom_digits {
            None => BigInt::one(),
            Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => {
                BigInt::from_radix_be(
                    Sign::Plus,
                    &d.bytes().map(|b| b - b'0').collect::<Vec<_>>(),
                    10,
                )
                .ok_or_else(bad)?
            }
            Some(_) => return Err(bad()),
        };
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn canonicalizes_sign_and_gcd() {
        let r = rat(2, -4);
        assert_eq!(r, rat(-1, 2));
        assert_eq!(r.numerator(), &BigInt::from(-1));
        assert_eq!(r.denominator(), &BigInt::from(2));
    }

    #[test]
    fn canonicalizes_zero_and_integers() {
        assert_eq!(rat(0, 5), Rational::zero());
        assert_eq!(rat(0, 5).denominator(), &BigInt::from(1));
        assert_eq!(rat(6, 3), Rational::from_int(2));
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(Rational::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn pow_reciprocal_square() {
        assert_eq!(rat(2, 3).pow(-2).unwrap(), rat(9, 4));
    }

    #[test]
    fn pow_zero_conventions() {
        assert_eq!(Rational::zero().pow(0).unwrap(), Rational::one());
        assert_eq!(Rational::zero().pow(3).unwrap(), Rational::zero());
        assert_eq!(Rational::zero().pow(-1), Err(Error::ZeroToNegativePower));
    }

    #[test]
    fn display_matches_text_format() {
        assert_eq!(rat(-59, 2).to_string(), "-59/2");
        assert_eq!(rat(7, 1).to_string(), "7");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn parses_and_round_trips() {
        for s in ["-59/2", "7", "0", "1211/32", "-60"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("\u{2212}59/2".parse::<Rational>().unwrap(), rat(-59, 2));
        assert_eq!("2/4".parse::<Rational>().unwrap(), rat(1, 2));
    }

    #[test]
    fn rejects_malformed_literals() {
        for s in ["", "/2", "1/", "1/2/3", "1.5", "a", "+3", "5/-2", "1 / 2"] {
            assert!(s.parse::<Rational>().is_err(), "accepted {s:?}");
        }
        assert_eq!("1/0".parse::<Rational>(), Err(Error::ZeroDenominator));
    }

}
