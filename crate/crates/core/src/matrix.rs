//! Square matrices over exact rings, with fraction-free determinants.
//!
//! Determinants and leading principal minors use one-step Bareiss
//! elimination: every division is exact in the ground ring, so polynomial
//! and integer matrices never leave their ring.  Characteristic polynomials
//! come from the Faddeev–LeVerrier recurrence over the rationals.

use crate::poly::Poly;
use crate::rational::{rat_int, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::{Error as DeError, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Ring operations Bareiss elimination needs beyond `Zero`.  `exact_div`
/// may assume the divisor is nonzero and the division exact;
/// implementations assert it.
pub trait PivotRing: Clone + Zero {
    fn mul(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn exact_div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl PivotRing for Rational {
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl PivotRing for BigInt {
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = num_integer::Integer::div_rem(self, rhs);
        debug_assert!(r.is_zero(), "inexact integer division in Bareiss");
        q
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl PivotRing for Poly {
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn exact_div(&self, rhs: &Self) -> Self {
        self.div_exact(rhs).expect("inexact polynomial division in Bareiss")
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Determinant by Bareiss elimination with row pivoting; works in any
/// `PivotRing` because every division is by a previous pivot and exact.
pub fn bareiss_det<T: PivotRing>(n: usize, mut a: Vec<T>) -> T {
    assert_eq!(a.len(), n * n);
    if n == 0 {
        panic!("determinant of empty matrix");
    }
    let mut negate = false;
    let mut prev = None::<T>;
    for r in 0..n - 1 {
        if a[r * n + r].is_zero() {
            match (r + 1..n).find(|&i| !a[i * n + r].is_zero()) {
                None => return T::zero(),
                Some(i) => {
                    for j in 0..n {
                        a.swap(r * n + j, i * n + j);
                    }
                    negate = !negate;
                }
            }
        }
        for i in r + 1..n {
            for j in r + 1..n {
                let num = a[r * n + r]
                    .mul(&a[i * n + j])
                    .sub(&a[i * n + r].mul(&a[r * n + j]));
                a[i * n + j] = match &prev {
                    None => num,
                    Some(p) => num.exact_div(p),
                };
            }
        }
        prev = Some(a[r * n + r].clone());
    }
    let det = a[n * n - 1].clone();
    if negate {
        det.neg()
    } else {
        det
    }
}

/// Single-pass Bareiss without pivoting: the successive pivots are exactly
/// the leading principal minors.  Returns `None` as soon as a pivot
/// vanishes (callers fall back to per-minor determinants).
pub fn bareiss_leading_minors<T: PivotRing>(n: usize, mut a: Vec<T>) -> Option<Vec<T>> {
    assert_eq!(a.len(), n * n);
    let mut minors = Vec::with_capacity(n);
    let mut prev = None::<T>;
    for r in 0..n {
        if a[r * n + r].is_zero() {
            return None;
        }
        minors.push(a[r * n + r].clone());
        for i in r + 1..n {
            for j in r + 1..n {
                let num = a[r * n + r]
                    .mul(&a[i * n + j])
                    .sub(&a[i * n + r].mul(&a[r * n + j]));
                a[i * n + j] = match &prev {
                    None => num,
                    Some(p) => num.exact_div(p),
                };
            }
        }
        prev = Some(a[r * n + r].clone());
    }
    Some(minors)
}

/// Square matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        PolyMatrix { n, entries: vec![Poly::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, Poly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let n = rows.len();
        assert!(n >= 1 && rows.iter().all(|r| r.len() == n), "matrix must be square");
        PolyMatrix { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Poly) {
        self.entries[r * self.n + c] = v;
    }

    /// Leading `l x l` sub-block, `1 <= l <= n`.
    pub fn leading_block(&self, l: usize) -> PolyMatrix {
        assert!((1..=self.n).contains(&l));
        let mut m = PolyMatrix::zero(l);
        for r in 0..l {
            for c in 0..l {
                m.set(r, c, self.get(r, c).clone());
            }
        }
        m
    }

    /// Exact determinant.
    pub fn det(&self) -> Poly {
        bareiss_det(self.n, self.entries.clone())
    }

    /// All leading principal minors `det(M_l)`, `l = 1..=n`.  Uses the
    /// single-pass pivot sequence when no pivot vanishes, individual
    /// determinants otherwise.
    pub fn leading_minors(&self) -> Vec<Poly> {
        match bareiss_leading_minors(self.n, self.entries.clone()) {
            Some(ms) => ms,
            None => (1..=self.n).map(|l| self.leading_block(l).det()).collect(),
        }
    }

    /// `self + shift * I`.
    pub fn add_shift(&self, shift: &Poly) -> PolyMatrix {
        let mut m = self.clone();
        for i in 0..self.n {
            let e = m.get(i, i) + shift;
            m.set(i, i, e);
        }
        m
    }

    /// Entry-wise evaluation at a rational point.
    pub fn eval(&self, t: &Rational) -> RatMatrix {
        RatMatrix {
            n: self.n,
            entries: self.entries.iter().map(|p| p.eval(t)).collect(),
        }
    }

    /// Entry-wise evaluation to floats.
    pub fn eval_f64(&self, t: f64) -> Vec<f64> {
        self.entries.iter().map(|p| p.eval_f64(t)).collect()
    }
}

impl Serialize for PolyMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.n))?;
        for r in 0..self.n {
            seq.serialize_element(&self.entries[r * self.n..(r + 1) * self.n])?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for PolyMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = PolyMatrix;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a square array of polynomial rows")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<PolyMatrix, A::Error> {
                let mut rows: Vec<Vec<Poly>> = Vec::new();
                while let Some(row) = seq.next_element::<Vec<Poly>>()? {
                    rows.push(row);
                }
                let n = rows.len();
                if n == 0 || rows.iter().any(|r| r.len() != n) {
                    return Err(A::Error::custom("matrix rows must form a square"));
                }
                Ok(PolyMatrix::from_rows(rows))
            }
        }
        d.deserialize_seq(V)
    }
}

/// Square matrix of rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        RatMatrix { n, entries: vec![Rational::zero(); n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        assert!(n >= 1 && rows.iter().all(|r| r.len() == n), "matrix must be square");
        RatMatrix { n, entries: rows.into_iter().flatten().collect() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.n + c] = v;
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn leading_block(&self, l: usize) -> RatMatrix {
        assert!((1..=self.n).contains(&l));
        let mut m = RatMatrix::zero(l);
        for r in 0..l {
            for c in 0..l {
                m.set(r, c, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn det(&self) -> Rational {
        bareiss_det(self.n, self.entries.clone())
    }

    fn mat_mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, rhs.n);
        let mut out = RatMatrix::zero(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                let mut acc = Rational::zero();
                for j in 0..self.n {
                    if !num_traits::Zero::is_zero(self.get(r, j)) {
                        acc += self.get(r, j) * rhs.get(j, c);
                    }
                }
                out.set(r, c, acc);
            }
        }
        out
    }
}

/// Characteristic polynomial `det(xI - M)` by the Faddeev–LeVerrier
/// recurrence; always monic of degree `n`, exact over Q.
pub fn charpoly(m: &RatMatrix) -> Poly {
    let n = m.size();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    // M_1 = A, c_{n-1} = -tr(M_1); M_{j+1} = A(M_j + c_{n-j} I).
    let mut mj = m.clone();
    for j in 1..=n {
        let c = -(mj.trace() / rat_int(j as i64));
        coeffs[n - j] = c.clone();
        if j == n {
            break;
        }
        for i in 0..n {
            let e = mj.get(i, i) + &c;
            mj.set(i, i, e);
        }
        mj = m.mat_mul(&mj);
    }
    Poly::new(coeffs)
}
