//! Univariate polynomials over the rationals, dense in ascending powers.
//!
//! The same type serves polynomials in the deformation parameter `t` and
//! characteristic polynomials in a spectral variable.  Invariant: `coeffs`
//! never ends in a zero, so the zero polynomial is the empty vector and
//! equality is plain coefficient equality.
//!
//! Serialized form is the ascending coefficient array; integer
//! coefficients appear as JSON numbers, anything else as a "p/q" string.

use crate::rational::{rat_int, rat_sign, rat_to_f64, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn from_int(n: i64) -> Self {
        Poly::constant(rat_int(n))
    }

    /// `c * x^pow`.
    pub fn monomial(c: Rational, pow: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); pow + 1];
        coeffs[pow] = c;
        Poly { coeffs }
    }

    /// Ascending integer coefficients, e.g. `[0, 0, -3]` is `-3x^2`.
    pub fn from_coeffs(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rat_to_f64(c);
        }
        acc
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_int(i as i64 + 1))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `-x` for `x`.
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Euclidean division; panics if `d` is zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lead_inv = Rational::one() / d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let q = &rem[i] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for j in 0..dd {
                let sub = &q * &d.coeffs[j];
                rem[i - dd + j] -= sub;
            }
            rem[i] = Rational::zero();
            quot[i - dd] = q;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Quotient when the division is exact, `None` otherwise.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (gcd of anything with zero is the other argument made monic).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    /// Divides out the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&(Rational::one() / l.clone())),
        }
    }

    /// Scales by a positive rational so the coefficients are coprime
    /// integers; the sign of every coefficient is preserved.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = num_integer::lcm(den_lcm, c.denom().clone());
        }
        let mut num_gcd = BigInt::zero();
        for c in &self.coeffs {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_integer::gcd(num_gcd, scaled);
        }
        let factor = Rational::new(den_lcm, num_gcd);
        self.scale(&factor.abs())
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn squarefree_part(&self) -> Poly {
        if self.degree().unwrap_or(0) <= 1 {
            return self.clone();
        }
        let g = Poly::gcd(self, &self.derivative());
        if g.degree() == Some(0) {
            self.clone()
        } else {
            self.div_exact(&g).expect("gcd must divide")
        }
    }

    /// Sign of the polynomial at +infinity (-1, 0, +1).
    pub fn sign_at_pos_inf(&self) -> i8 {
        self.leading().map_or(0, rat_sign)
    }

    /// Sign at -infinity.
    pub fn sign_at_neg_inf(&self) -> i8 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = self.sign_at_pos_inf();
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    /// Renders with the given variable name, ascending powers.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let coeff_str = if mag.is_one() && i > 0 {
                String::new()
            } else if mag.denom().is_one() {
                format!("{}", mag.numer())
            } else {
                format!("({})", mag)
            };
            out.push_str(&coeff_str);
            if i == 1 {
                out.push_str(var);
            } else if i > 1 {
                out.push_str(&format!("{}^{}", var, i));
            } else if coeff_str.is_empty() {
                out.push('1');
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $trait<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("t"))
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            if c.denom().is_one() {
                if let Some(n) = c.numer().to_i64() {
                    seq.serialize_element(&n)?;
                    continue;
                }
            }
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

struct CoeffVisitor;

impl<'de> Visitor<'de> for CoeffVisitor {
    type Value = Rational;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a \"p/q\" string")
    }

    fn visit_i64<E: serde::de::Error>(self, v: i64) -> Result<Rational, E> {
        Ok(rat_int(v))
    }

    fn visit_u64<E: serde::de::Error>(self, v: u64) -> Result<Rational, E> {
        Ok(Rational::from_integer(BigInt::from(v)))
    }

    fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<Rational, E> {
        crate::rational::parse_rational(v)
            .ok_or_else(|| E::custom(format!("invalid rational {v:?}")))
    }
}

struct RationalField(Rational);

impl<'de> Deserialize<'de> for RationalField {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(CoeffVisitor).map(RationalField)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct PolyVisitor;
        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = Poly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an ascending coefficient array")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Poly, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(RationalField(c)) = seq.next_element()? {
                    coeffs.push(c);
                }
                Ok(Poly::new(coeffs))
            }
        }
        d.deserialize_seq(PolyVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    #[test]
    fn test_add_basic() {
        // (1 + t^2)^2 = 1 + 2t^2 + t^4
        let p = Poly::from_coeffs(&[1, 0, 1]);
        assert_eq!(&p * &p, Poly::from_coeffs(&[1, 0, 2, 0, 1]));
    }

    #[test]
    fn test_mul_by_zero() {
        let p = Poly::from_coeffs(&[3, -1, 2]);
        assert_eq!(&p * &Poly::zero(), Poly::zero());
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn test_shift_expansion() {
        // 36t^2 (1-t^2)^2 = 36t^2 - 72t^4 + 36t^6
        let shift = Poly::from_coeffs(&[0, 0, 36]);
        let fac = Poly::from_coeffs(&[1, 0, -1]);
        let got = &shift * &fac.pow(2);
        assert_eq!(got, Poly::from_coeffs(&[0, 0, 36, 0, -72, 0, 36]));
    }

    #[test]
    fn test_eval() {
        // p = 2 - t + t^3 at t = 1/2: 2 - 1/2 + 1/8 = 13/8
        let p = Poly::from_coeffs(&[2, -1, 0, 1]);
        assert_eq!(p.eval(&rat(1, 2)), rat(13, 8));
        assert!((p.eval_f64(0.5) - 1.625).abs() < 1e-15);
    }

    #[test]
    fn test_div_rem() {
        // t^3 - 1 = (t - 1)(t^2 + t + 1)
        let p = Poly::from_coeffs(&[-1, 0, 0, 1]);
        let d = Poly::from_coeffs(&[-1, 1]);
        let (q, r) = p.div_rem(&d);
        assert_eq!(q, Poly::from_coeffs(&[1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(p.div_exact(&d), Some(q));
        assert_eq!(p.div_exact(&Poly::from_coeffs(&[1, 1])), None);
    }

    #[test]
    fn test_gcd_squarefree() {
        // p = (t-1)^2 (t+2): squarefree part (t-1)(t+2)
        let p = Poly::from_coeffs(&[-1, 1]).pow(2) * Poly::from_coeffs(&[2, 1]);
        let sf = p.squarefree_part();
        assert_eq!(sf.monic(), &Poly::from_coeffs(&[-1, 1]) * &Poly::from_coeffs(&[2, 1]));
    }

    #[test]
    fn test_display() {
        assert_eq!(Poly::from_coeffs(&[0, 0, 9, 0, -135]).to_string(), "9t^2 - 135t^4");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::new(vec![rat(3, 4)]).display_with("x"), "(3/4)");
        assert_eq!(Poly::from_coeffs(&[0, -1]).to_string(), "-t");
    }

    #[test]
    fn test_serde_roundtrip() {
        let p = Poly::new(vec![rat_int(0), rat(1, 3), rat_int(-7)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[0,\"1/3\",-7]");
        let back: Poly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(-6i64..6, 0..6).prop_map(|cs| Poly::from_coeffs(&cs))
    }

    proptest! {
        #[test]
        fn prop_ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn prop_div_rem_reconstructs(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().map_or(true, |rd| rd < b.degree().unwrap()));
        }

        #[test]
        fn prop_eval_hom(a in small_poly(), b in small_poly(), n in -5i64..5, d in 1i64..5) {
            let x = rat(n, d);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
