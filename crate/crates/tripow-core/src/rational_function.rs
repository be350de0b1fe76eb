//! Ratios of univariate polynomials, the scalar field while the matrix
//! carries a symbolic perturbation.
//!
//! Every value is kept canonical: numerator and denominator coprime, the
//! denominator monic and nonzero. Arithmetic re-canonicalizes eagerly so
//! reading the value at zero is always done on the reduced form, and so
//! degrees stay bounded through long recursions.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Builds the canonical reduced form of `num / den`: common factors
    /// cancelled and the denominator made monic (its sign and scale move
    /// into the numerator).
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominatorPolynomial);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = Polynomial::gcd(&num, &den);
        let mut num = num.exact_div(&g);
        let mut den = den.exact_div(&g);
        let lead = den.leading().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let inv = lead.recip().expect("leading coefficient is nonzero");
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: Polynomial::zero(),
            den: Polynomial::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction {
            num: Polynomial::one(),
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction {
            num: Polynomial::constant(c),
            den: Polynomial::one(),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value at zero, `num(0) / den(0)`.
    ///
    /// Because the representation is reduced, the limit exists exactly
    /// when the denominator's constant term is nonzero; otherwise this is
    /// a genuine pole.
    pub fn eval_at_zero(&self) -> Result<Rational> {
        let d0 = self.den.at_zero();
        if d0.is_zero() {
            return Err(Error::PoleAtZero);
        }
        Ok(self.num.at_zero() / d0)
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominatorPolynomial);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        RationalFunction::constant(c)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("denominator product is nonzero")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("denominator product is nonzero")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("denominator product is nonzero")
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
            .expect("nonzero divisor numerator")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_value_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
        impl $trait<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                self.$method(&rhs)
            }
        }
    };
}

forward_value_binop!(Add, add);
forward_value_binop!(Sub, sub);
forward_value_binop!(Mul, mul);
forward_value_binop!(Div, div);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Polynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn poly(cs: &[i64]) -> Polynomial {
        Polynomial::new(cs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(poly(num), poly(den)).unwrap()
    }

    #[test]
    fn cancels_common_factor() {
        // (x^2 - x) / x reduces to x - 1.
        let f = rf(&[0, -1, 1], &[0, 1]);
        assert_eq!(f.numerator(), &poly(&[-1, 1]));
        assert_eq!(f.denominator(), &Polynomial::one());
    }

    #[test]
    fn normalizes_denominator_to_monic() {
        // (2 + 3x) / (1 - x) becomes (-2 - 3x) / (x - 1).
        let f = rf(&[2, 3], &[1, -1]);
        assert_eq!(f.numerator(), &poly(&[-2, -3]));
        assert_eq!(f.denominator(), &poly(&[-1, 1]));
    }

    #[test]
    fn keeps_pole_at_zero() {
        // (x^2 + x) / x^2 reduces to (x + 1) / x.
        let f = rf(&[0, 1, 1], &[0, 0, 1]);
        assert_eq!(f.numerator(), &poly(&[1, 1]));
        assert_eq!(f.denominator(), &poly(&[0, 1]));
        assert_eq!(f.eval_at_zero(), Err(Error::PoleAtZero));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(poly(&[1]), Polynomial::zero()),
            Err(Error::ZeroDenominatorPolynomial)
        );
    }

    #[test]
    fn eval_at_zero_reads_constant_terms() {
        assert_eq!(rf(&[-1, 1], &[1]).eval_at_zero().unwrap(), rat(-1, 1));
        assert_eq!(rf(&[2, 3], &[1, 1]).eval_at_zero().unwrap(), rat(2, 1));
    }

    #[test]
    fn construction_is_idempotent_on_canonical_values() {
        let f = rf(&[2, 3], &[1, -1]);
        let again =
            RationalFunction::new(f.numerator().clone(), f.denominator().clone()).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn field_ops_recanonicalize() {
        let x_inv = rf(&[1], &[0, 1]);
        let sum = &x_inv + &rf(&[0, 1, 1], &[0, 1]); // 1/x + (x^2+x)/x
        assert_eq!(sum, rf(&[1, 1, 1], &[0, 1]));
        let prod = &x_inv * &rf(&[0, 0, 1], &[1]); // (1/x) * x^2 = x
        assert_eq!(prod, RationalFunction::from(poly(&[0, 1])));
        let neg_then_back = -&(-&x_inv);
        assert_eq!(neg_then_back, x_inv);
        let mixed = RationalFunction::new(
            Polynomial::new(vec![rat(1, 2), rat(1, 3)]),
            Polynomial::new(vec![rat(2, 1), rat(4, 1)]),
        )
        .unwrap();
        assert_eq!(mixed.denominator().leading(), Some(&Rational::one()));
    }
}
