//! Exact scalars: arbitrary-precision rationals and Gaussian rationals.
//!
//! `Rational` is `num_rational::BigRational`, which already maintains the
//! canonical form we rely on (lowest terms, positive denominator, zero as
//! 0/1).  `GaussianRational` is the quadratic extension by `i`, needed only
//! because the Reeb field acts with purely imaginary eigenvalues.

use num_bigint::{BigInt, Sign as IntSign};
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

pub type Rational = num_rational::BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational.  Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of a rational as -1, 0, or +1.
pub fn rat_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.numer().sign() == IntSign::Minus {
        -1
    } else {
        1
    }
}

/// Lossy conversion for numeric pipelines; exact code never calls this.
pub fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

/// Parses "p/q" or a bare integer into an exact rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=u64::from(n) {
        acc *= i;
    }
    acc
}

/// Element of Q(i).  Invariant: both parts canonical rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `re^2 + im^2`.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational { re: &self.re / &n, im: -(&self.im / &n) })
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.inv().expect("division by zero GaussianRational")
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn test_parse_rational() {
        assert_eq!(parse_rational("1/2"), Some(rat(1, 2)));
        assert_eq!(parse_rational("-9/10"), Some(rat(-9, 10)));
        assert_eq!(parse_rational("4/2"), Some(rat_int(2))); // reduced
        assert_eq!(parse_rational("7"), Some(rat_int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn test_rat_sign() {
        assert_eq!(rat_sign(&rat(-3, 7)), -1);
        assert_eq!(rat_sign(&rat_int(0)), 0);
        assert_eq!(rat_sign(&rat(5, 9)), 1);
    }

    #[test]
    fn test_factorial() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(10), BigInt::from(3628800));
    }

    #[test]
    fn test_gaussian_mul() {
        // (1+2i)(3-i) = 5+5i
        let a = GaussianRational::new(rat_int(1), rat_int(2));
        let b = GaussianRational::new(rat_int(3), rat_int(-1));
        assert_eq!(&a * &b, GaussianRational::new(rat_int(5), rat_int(5)));
        // i^2 = -1
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
    }

    #[test]
    fn test_gaussian_conj_norm() {
        let a = GaussianRational::new(rat(1, 2), rat(-3, 4));
        assert_eq!(&a * &a.conj(), GaussianRational::from_rational(a.norm_sqr()));
    }

    proptest! {
        // Field axioms on a small grid of Gaussian rationals.
        #[test]
        fn prop_gaussian_field(re_n in -20i64..20, re_d in 1i64..8,
                               im_n in -20i64..20, im_d in 1i64..8) {
            let a = GaussianRational::new(rat(re_n, re_d), rat(im_n, im_d));
            if !a.is_zero() {
                let inv = a.inv().unwrap();
                prop_assert_eq!(&a * &inv, GaussianRational::one());
            }
            prop_assert_eq!(&a + &(-&a), GaussianRational::zero());
            prop_assert!((&a - &a).is_zero());
        }
    }
}
