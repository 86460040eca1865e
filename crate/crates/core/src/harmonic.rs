//! Brute-force oracle on actual spherical harmonics.
//!
//! Polynomials live on C^2 in the commuting variables `z, w, zbar, wbar`
//! with Gaussian-rational coefficients.  The CR vector fields act as the
//! derivations
//!
//! ```text
//!     Z1    = wbar d/dz   - zbar d/dw
//!     Z1bar = w    d/dzbar - z   d/dwbar
//!     T     = i (z d/dz + w d/dw - zbar d/dzbar - wbar d/dwbar)
//! ```
//!
//! and the Kohn Laplacians of the two reference structures are the word
//! compositions `box_b = -Z1 Z1bar`, `box_b_bar = -Z1bar Z1`.  The
//! deformed, `(1-t^2)`-cleared operators are assembled from those
//! generators as `OperatorExpr` values with polynomial-in-`t` weights, and
//! applied term by term — no spectral shortcuts — so `oracle_matrix`
//! recovers the pentadiagonal block from first principles.
//!
//! Bidegree (p, q) means degree p in (z, w) and q in (zbar, wbar);
//! harmonic means annihilated by `delta = d2/dzdzbar + d2/dwdwbar`.  The
//! inner product is the L^2 pairing on the unit sphere with normalized
//! (mass one) measure, where distinct monomial classes are orthogonal and
//! `<z^a w^b, z^a w^b> = a! b! / (a+b+1)!`.

use crate::matrix::PolyMatrix;
use crate::poly::Poly;
use crate::rational::{factorial, GaussianRational, Rational};
use crate::Error;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponents of `z^a w^b zbar^c wbar^d` as `[a, b, c, d]`.
pub type Exponents = [u32; 4];

const Z: usize = 0;
const W: usize = 1;
const ZBAR: usize = 2;
const WBAR: usize = 3;

/// Polynomial on C^2.  Zero coefficients are never stored, so equality is
/// structural; the map ordering keeps every iteration deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HarmonicPoly {
    terms: BTreeMap<Exponents, GaussianRational>,
}

impl HarmonicPoly {
    pub fn zero() -> Self {
        HarmonicPoly::default()
    }

    pub fn monomial(e: Exponents, c: GaussianRational) -> Self {
        let mut p = HarmonicPoly::zero();
        p.add_term(e, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, e: Exponents, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            None => {
                self.terms.insert(e, c);
            }
            Some(existing) => {
                let sum = &*existing + &c;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *existing = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&GaussianRational::from_int(-1)))
    }

    pub fn scale(&self, s: &GaussianRational) -> Self {
        if s.is_zero() {
            return HarmonicPoly::zero();
        }
        HarmonicPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn scale_rat(&self, s: &Rational) -> Self {
        self.scale(&GaussianRational::from_rational(s.clone()))
    }

    /// Partial derivative in the given variable.
    fn diff(&self, var: usize) -> Self {
        let mut out = HarmonicPoly::zero();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[var] -= 1;
            out.add_term(e2, c * &GaussianRational::from_int(i64::from(e[var])));
        }
        out
    }

    /// Multiplication by the given variable.
    fn mul_var(&self, var: usize) -> Self {
        let mut out = HarmonicPoly::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            e2[var] += 1;
            out.add_term(e2, c.clone());
        }
        out
    }

    /// `Z1 = wbar d/dz - zbar d/dw`; shifts bidegree (p,q) to (p-1, q+1).
    pub fn z1(&self) -> Self {
        self.diff(Z).mul_var(WBAR).sub(&self.diff(W).mul_var(ZBAR))
    }

    /// `Z1bar = w d/dzbar - z d/dwbar`; shifts bidegree to (p+1, q-1).
    pub fn z1bar(&self) -> Self {
        self.diff(ZBAR).mul_var(W).sub(&self.diff(WBAR).mul_var(Z))
    }

    /// Reeb action `T = i(z d/dz + w d/dw - zbar d/dzbar - wbar d/dwbar)`.
    pub fn reeb(&self) -> Self {
        let mut out = HarmonicPoly::zero();
        let i_unit = GaussianRational::i();
        for (e, c) in &self.terms {
            let weight = i64::from(e[Z]) + i64::from(e[W])
                - i64::from(e[ZBAR])
                - i64::from(e[WBAR]);
            out.add_term(*e, &(c * &i_unit) * &GaussianRational::from_int(weight));
        }
        out
    }

    /// Kohn Laplacian `box_b = -Z1 Z1bar`, applied as raw derivations.
    pub fn box_b(&self) -> Self {
        self.z1bar().z1().scale(&GaussianRational::from_int(-1))
    }

    /// Conjugate Kohn Laplacian `box_b_bar = -Z1bar Z1`.
    pub fn box_b_bar(&self) -> Self {
        self.z1().z1bar().scale(&GaussianRational::from_int(-1))
    }

    /// Flat Laplacian `d2/dzdzbar + d2/dwdwbar`.
    pub fn laplacian(&self) -> Self {
        self.diff(Z).diff(ZBAR).add(&self.diff(W).diff(WBAR))
    }

    pub fn is_harmonic(&self) -> bool {
        self.laplacian().is_zero()
    }

    /// Bidegree if every term agrees (and the polynomial is nonzero).
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let bd = (first[Z] + first[W], first[ZBAR] + first[WBAR]);
        for e in it {
            if (e[Z] + e[W], e[ZBAR] + e[WBAR]) != bd {
                return None;
            }
        }
        Some(bd)
    }

    /// Splits into bidegree-homogeneous components.
    pub fn bidegree_components(&self) -> BTreeMap<(u32, u32), HarmonicPoly> {
        let mut out: BTreeMap<(u32, u32), HarmonicPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let bd = (e[Z] + e[W], e[ZBAR] + e[WBAR]);
            out.entry(bd).or_default().add_term(*e, c.clone());
        }
        out
    }

    /// The scalar `lambda` with `self == lambda * base`, if one exists
    /// (`base` nonzero).  Zero `self` gives zero.
    pub fn proportion_to(&self, base: &HarmonicPoly) -> Option<GaussianRational> {
        assert!(!base.is_zero());
        if self.is_zero() {
            return Some(GaussianRational::zero());
        }
        let (e0, c0) = base.terms.iter().next().unwrap();
        let mine = self.terms.get(e0)?;
        let lambda = mine / c0;
        (self == &base.scale(&lambda)).then_some(lambda)
    }
}

impl fmt::Display for HarmonicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["z", "w", "zbar", "wbar"];
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})")?;
            for (v, &pow) in e.iter().enumerate() {
                match pow {
                    0 => {}
                    1 => write!(f, " {}", names[v])?,
                    _ => write!(f, " {}^{}", names[v], pow)?,
                }
            }
        }
        Ok(())
    }
}

/// Moment `<z^a w^b, z^a w^b> = a! b! / (a+b+1)!` generalized: the sphere
/// integral of `z^A zbar^A w^C wbar^C` with normalized measure.
fn moment(a_pow: u32, c_pow: u32) -> Rational {
    Rational::new(
        factorial(a_pow) * factorial(c_pow),
        factorial(a_pow + c_pow + 1),
    )
}

/// Hermitian L^2 pairing `<f, g>` on the unit sphere, exact.  Conjugate
/// linear in `g`; a monomial of `f` pairs with a monomial of `g` only when
/// the combined exponents descend to the diagonal torus classes.
pub fn inner_product(f: &HarmonicPoly, g: &HarmonicPoly) -> GaussianRational {
    let mut acc = GaussianRational::zero();
    for (ef, cf) in f.terms() {
        for (eg, cg) in g.terms() {
            // f * conj(g) has z-exponent ef[Z] + eg[ZBAR], etc.; the
            // integral vanishes unless z- and zbar-exponents match and
            // likewise for w.
            let za = ef[Z] + eg[ZBAR];
            let zb = ef[ZBAR] + eg[Z];
            let wa = ef[W] + eg[WBAR];
            let wb = ef[WBAR] + eg[W];
            if za != zb || wa != wb {
                continue;
            }
            let m = GaussianRational::from_rational(moment(za, wa));
            acc = &acc + &(&(cf * &cg.conj()) * &m);
        }
    }
    acc
}

/// Monomial basis of the full bidegree-(p, q) space, ordered by (a, c)
/// with `a + b = p`, `c + d = q`.
fn monomials_of_bidegree(p: u32, q: u32) -> Vec<Exponents> {
    let mut out = Vec::with_capacity(((p + 1) * (q + 1)) as usize);
    for a in 0..=p {
        for c in 0..=q {
            out.push([a, p - a, c, q - c]);
        }
    }
    out
}

/// Basis of the harmonic subspace of bidegree (p, q): the exact kernel of
/// the flat Laplacian, dimension `p + q + 1`.
pub fn bidegree_basis(p: u32, q: u32) -> Vec<HarmonicPoly> {
    let sources = monomials_of_bidegree(p, q);
    if p == 0 || q == 0 {
        // The Laplacian vanishes identically: every monomial is harmonic.
        return sources
            .into_iter()
            .map(|e| HarmonicPoly::monomial(e, GaussianRational::one()))
            .collect();
    }
    let targets = monomials_of_bidegree(p - 1, q - 1);
    let target_index: BTreeMap<Exponents, usize> =
        targets.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    let rows = targets.len();
    let cols = sources.len();
    // Laplacian matrix in the monomial bases.
    let mut m = vec![Rational::zero(); rows * cols];
    for (j, e) in sources.iter().enumerate() {
        let lap = HarmonicPoly::monomial(*e, GaussianRational::one()).laplacian();
        for (et, c) in lap.terms() {
            debug_assert!(c.is_real());
            m[target_index[et] * cols + j] = c.re.clone();
        }
    }
    // Reduced row echelon form over Q.
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
            continue;
        };
        for j in 0..cols {
            m.swap(r * cols + j, pr * cols + j);
        }
        let inv = Rational::one() / m[r * cols + c].clone();
        for j in 0..cols {
            m[r * cols + j] = &m[r * cols + j] * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i * cols + c].is_zero() {
                let f = m[i * cols + c].clone();
                for j in 0..cols {
                    m[i * cols + j] = &m[i * cols + j] - &(&f * &m[r * cols + j]);
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    // Kernel basis: one vector per free column.
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut vec_poly = HarmonicPoly::monomial(sources[free], GaussianRational::one());
        for (row, &pc) in pivot_cols.iter().enumerate() {
            let coef = &m[row * cols + free];
            if !coef.is_zero() {
                vec_poly.add_term(
                    sources[pc],
                    GaussianRational::from_rational(-coef.clone()),
                );
            }
        }
        debug_assert!(vec_poly.is_harmonic());
        basis.push(vec_poly);
    }
    assert_eq!(basis.len(), (p + q + 1) as usize, "harmonic dimension");
    basis
}

/// Generators for operator words, listed in application order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    Z1,
    Z1Bar,
    Reeb,
}

/// A `Poly`-weighted sum of generator words; words apply left to right.
#[derive(Clone, Debug, Default)]
pub struct OperatorExpr {
    terms: Vec<(Poly, Vec<Generator>)>,
}

impl OperatorExpr {
    pub fn new(terms: Vec<(Poly, Vec<Generator>)>) -> Self {
        OperatorExpr { terms }
    }

    /// `box_b = -Z1 Z1bar` (Z1bar acts first).
    pub fn box_b() -> Self {
        OperatorExpr::new(vec![(Poly::from_int(-1), vec![Generator::Z1Bar, Generator::Z1])])
    }

    /// `box_b_bar = -Z1bar Z1`.
    pub fn box_b_bar() -> Self {
        OperatorExpr::new(vec![(Poly::from_int(-1), vec![Generator::Z1, Generator::Z1Bar])])
    }

    pub fn scale(&self, s: &Poly) -> Self {
        OperatorExpr {
            terms: self.terms.iter().map(|(p, w)| (p * s, w.clone())).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(rhs.terms.iter().cloned());
        OperatorExpr { terms }
    }

    /// Composition `self ∘ rhs` (rhs acts first).
    pub fn compose(&self, rhs: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (pl, wl) in &self.terms {
            for (pr, wr) in &rhs.terms {
                let mut word = wr.clone();
                word.extend(wl.iter().copied());
                terms.push((pl * pr, word));
            }
        }
        OperatorExpr { terms }
    }

    /// Applies the expression to `f`.  The result is indexed by powers of
    /// `t`: entry `s` collects the coefficient polynomial of `t^s`.
    pub fn apply(&self, f: &HarmonicPoly) -> Vec<HarmonicPoly> {
        let mut out: Vec<HarmonicPoly> = Vec::new();
        for (poly, word) in &self.terms {
            if poly.is_zero() {
                continue;
            }
            let mut g = f.clone();
            for gen in word {
                g = match gen {
                    Generator::Z1 => g.z1(),
                    Generator::Z1Bar => g.z1bar(),
                    Generator::Reeb => g.reeb(),
                };
                if g.is_zero() {
                    break;
                }
            }
            if g.is_zero() {
                continue;
            }
            for (s, c) in poly.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                while out.len() <= s {
                    out.push(HarmonicPoly::zero());
                }
                out[s] = out[s].add(&g.scale_rat(c));
            }
        }
        while out.last().is_some_and(HarmonicPoly::is_zero) {
            out.pop();
        }
        out
    }
}

/// `(1-t^2) box_b(t) = box_b - t Z1^2 - t Z1bar^2 + t^2 box_b_bar`.
pub fn scaled_box_b_t() -> OperatorExpr {
    let t = Poly::from_coeffs(&[0, 1]);
    let t2 = Poly::from_coeffs(&[0, 0, 1]);
    let z1_sq = OperatorExpr::new(vec![(Poly::one(), vec![Generator::Z1, Generator::Z1])]);
    let z1bar_sq =
        OperatorExpr::new(vec![(Poly::one(), vec![Generator::Z1Bar, Generator::Z1Bar])]);
    OperatorExpr::box_b()
        .add(&z1_sq.scale(&-&t))
        .add(&z1bar_sq.scale(&-&t))
        .add(&OperatorExpr::box_b_bar().scale(&t2))
}

/// `(1-t^2) box_b_bar(t) = box_b_bar - t Z1bar^2 - t Z1^2 + t^2 box_b`.
pub fn scaled_box_b_bar_t() -> OperatorExpr {
    let t = Poly::from_coeffs(&[0, 1]);
    let t2 = Poly::from_coeffs(&[0, 0, 1]);
    let z1_sq = OperatorExpr::new(vec![(Poly::one(), vec![Generator::Z1, Generator::Z1])]);
    let z1bar_sq =
        OperatorExpr::new(vec![(Poly::one(), vec![Generator::Z1Bar, Generator::Z1Bar])]);
    OperatorExpr::box_b_bar()
        .add(&z1bar_sq.scale(&-&t))
        .add(&z1_sq.scale(&-&t))
        .add(&OperatorExpr::box_b().scale(&t2))
}

/// `(1-t^2)^2 Q(t) = 4t Z1bar^2 - 4t^2 (box_b + box_b_bar) + 4t^3 Z1^2`,
/// the lower-order correction of the deformed Paneitz operator.
pub fn scaled_q_t() -> OperatorExpr {
    let t = Poly::from_coeffs(&[0, 4]);
    let t2 = Poly::from_coeffs(&[0, 0, -4]);
    let t3 = Poly::from_coeffs(&[0, 0, 0, 4]);
    let z1_sq = OperatorExpr::new(vec![(Poly::one(), vec![Generator::Z1, Generator::Z1])]);
    let z1bar_sq =
        OperatorExpr::new(vec![(Poly::one(), vec![Generator::Z1Bar, Generator::Z1Bar])]);
    z1bar_sq
        .scale(&t)
        .add(&OperatorExpr::box_b().add(&OperatorExpr::box_b_bar()).scale(&t2))
        .add(&z1_sq.scale(&t3))
}

/// The rescaled Paneitz operator
/// `P(t) = [(1-t^2) box_b_bar(t)] ∘ [(1-t^2) box_b(t)] + (1-t^2)^2 Q(t)`
/// as an operator expression in the generators.
pub fn paneitz_expr() -> OperatorExpr {
    scaled_box_b_bar_t().compose(&scaled_box_b_t()).add(&scaled_q_t())
}

/// Applies the rescaled Paneitz operator to `f`; the vector is indexed by
/// powers of `t` (degree at most 4).
pub fn paneitz_apply(f: &HarmonicPoly) -> Vec<HarmonicPoly> {
    paneitz_expr().apply(f)
}

/// The unnormalized chain for block `k`: `u_1 = z^{2k-1}`,
/// `u_{i+1} = Z1^2 u_i`, living in bidegree `(2k-2i+1, 2i-2)`.
pub struct ChainBasis {
    pub k: u32,
    pub u: Vec<HarmonicPoly>,
}

impl ChainBasis {
    pub fn new(k: u32) -> Self {
        assert!(k >= 1);
        let mut u = Vec::with_capacity(k as usize);
        u.push(HarmonicPoly::monomial(
            [2 * k - 1, 0, 0, 0],
            GaussianRational::one(),
        ));
        for _ in 1..k {
            let next = u.last().unwrap().z1().z1();
            u.push(next);
        }
        ChainBasis { k, u }
    }

    /// Expected bidegree of `u_i` (1-based `i`).
    pub fn bidegree_of(k: u32, i: u32) -> (u32, u32) {
        (2 * k - 2 * i + 1, 2 * i - 2)
    }
}

/// Recovers the balanced block matrix by applying the Paneitz expression
/// to each chain vector and expanding the image exactly in the chain.
/// Anything that fails to expand — an unexpected bidegree, a component
/// not proportional to its chain vector, a non-real ratio — is fatal.
pub fn oracle_matrix(k: u32) -> Result<PolyMatrix, Error> {
    let chain = ChainBasis::new(k);
    let index_of: BTreeMap<(u32, u32), usize> = (1..=k)
        .map(|i| (ChainBasis::bidegree_of(k, i), (i - 1) as usize))
        .collect();
    let mut m = PolyMatrix::zero(k as usize);
    for (col, u_i) in chain.u.iter().enumerate() {
        let series = paneitz_apply(u_i);
        for (s, slice) in series.iter().enumerate() {
            for (bd, component) in slice.bidegree_components() {
                let Some(&row) = index_of.get(&bd) else {
                    return Err(Error::OracleInconsistency(format!(
                        "P(t) u_{} has a component of bidegree {:?} outside the chain",
                        col + 1,
                        bd
                    )));
                };
                let Some(lambda) = component.proportion_to(&chain.u[row]) else {
                    return Err(Error::OracleInconsistency(format!(
                        "component of P(t) u_{} in bidegree {:?} is not a chain multiple",
                        col + 1,
                        bd
                    )));
                };
                if !lambda.is_real() {
                    return Err(Error::OracleInconsistency(format!(
                        "chain coefficient of u_{} is not real: {}",
                        col + 1,
                        lambda
                    )));
                }
                let entry = m.get(row, col) + &Poly::monomial(lambda.re, s);
                m.set(row, col, entry);
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::rossi::{band_coeff, build_balanced};

    fn mono(e: Exponents) -> HarmonicPoly {
        HarmonicPoly::monomial(e, GaussianRational::one())
    }

    #[test]
    fn test_z1_on_coordinates() {
        // Z1 z = wbar, Z1 w = -zbar
        assert_eq!(mono([1, 0, 0, 0]).z1(), mono([0, 0, 0, 1]));
        assert_eq!(
            mono([0, 1, 0, 0]).z1(),
            mono([0, 0, 1, 0]).scale(&GaussianRational::from_int(-1))
        );
        // Z1 z^2 = 2 z wbar, still harmonic
        let got = mono([2, 0, 0, 0]).z1();
        assert_eq!(
            got,
            HarmonicPoly::monomial([1, 0, 0, 1], GaussianRational::from_int(2))
        );
        assert!(got.is_harmonic());
    }

    #[test]
    fn test_kohn_laplacian_eigenvalues() {
        // box_b f = (p+1) q f and box_b_bar f = p (q+1) f on H_{p,q}
        for (p, q) in [(1u32, 1u32), (2, 1), (3, 2), (0, 2)] {
            for f in bidegree_basis(p, q) {
                let pq = i64::from((p + 1) * q);
                let qp = i64::from(p * (q + 1));
                assert_eq!(f.box_b(), f.scale(&GaussianRational::from_int(pq)));
                assert_eq!(f.box_b_bar(), f.scale(&GaussianRational::from_int(qp)));
            }
        }
    }

    #[test]
    fn test_commutation_via_reeb() {
        // (box_b_bar - box_b) f = -i T f
        for (p, q) in [(2u32, 2u32), (1, 3), (4, 0)] {
            for f in bidegree_basis(p, q) {
                let lhs = f.box_b_bar().sub(&f.box_b());
                let rhs = f.reeb().scale(&(-&GaussianRational::i()));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn test_basis_dimension_and_harmonicity() {
        for p in 0..=5u32 {
            for q in 0..=(5 - p) {
                let basis = bidegree_basis(p, q);
                assert_eq!(basis.len(), (p + q + 1) as usize);
                for f in &basis {
                    assert!(f.is_harmonic());
                    assert_eq!(f.bidegree(), Some((p, q)));
                }
            }
        }
    }

    #[test]
    fn test_inner_product_moments() {
        // <1,1> = 1, <z,z> = 1/2, <zw, zw> = 1/6
        let one = mono([0, 0, 0, 0]);
        assert_eq!(inner_product(&one, &one), GaussianRational::one());
        let z = mono([1, 0, 0, 0]);
        assert_eq!(
            inner_product(&z, &z),
            GaussianRational::from_rational(rat(1, 2))
        );
        let zw = mono([1, 1, 0, 0]);
        assert_eq!(
            inner_product(&zw, &zw),
            GaussianRational::from_rational(rat(1, 6))
        );
        // distinct monomial classes are orthogonal
        assert!(inner_product(&z, &zw).is_zero());
    }

    #[test]
    fn test_chain_norm_ratios() {
        // ||u_{i+1}||^2 / ||u_i||^2 = c(2i+1) c(2i+2)
        for k in 1..=4u32 {
            let chain = ChainBasis::new(k);
            for i in 1..k as usize {
                let num = inner_product(&chain.u[i], &chain.u[i]);
                let den = inner_product(&chain.u[i - 1], &chain.u[i - 1]);
                let want = band_coeff(k, 2 * i as i64 + 1) * band_coeff(k, 2 * i as i64 + 2);
                assert_eq!(&num.re / &den.re, rat_int(want), "k={k} i={}", i + 1);
            }
        }
    }

    #[test]
    fn test_chain_orthogonality() {
        for k in 1..=4u32 {
            let chain = ChainBasis::new(k);
            for i in 0..k as usize {
                assert_eq!(
                    chain.u[i].bidegree(),
                    Some(ChainBasis::bidegree_of(k, i as u32 + 1))
                );
                assert!(chain.u[i].is_harmonic());
                for j in 0..i {
                    assert!(inner_product(&chain.u[i], &chain.u[j]).is_zero());
                }
            }
        }
    }

    #[test]
    fn test_paneitz_on_k1() {
        // P(t) z = -3t^2 z
        let series = paneitz_apply(&mono([1, 0, 0, 0]));
        assert_eq!(series.len(), 3);
        assert!(series[0].is_zero());
        assert!(series[1].is_zero());
        assert_eq!(series[2], mono([1, 0, 0, 0]).scale(&GaussianRational::from_int(-3)));
    }

    #[test]
    fn test_paneitz_at_zero_is_product_of_kohn() {
        // t = 0: P(0) = box_b_bar box_b with eigenvalue (p+1)q * p(q+1)
        for (p, q) in [(1u32, 2u32), (2, 2), (3, 1)] {
            for f in bidegree_basis(p, q) {
                let series = paneitz_apply(&f);
                let ev = i64::from((p + 1) * q) * i64::from(p * (q + 1));
                assert_eq!(series[0], f.scale(&GaussianRational::from_int(ev)));
            }
        }
    }

    #[test]
    fn test_oracle_matches_balanced_small() {
        for k in 1..=3u32 {
            assert_eq!(oracle_matrix(k).unwrap(), build_balanced(k), "k={k}");
        }
    }
}
