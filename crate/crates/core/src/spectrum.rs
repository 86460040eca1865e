//! Numeric spectra and exact spectral certificates for the blocks.
//!
//! The numeric side runs a cyclic Jacobi eigensolver on the symmetric
//! face.  The exact side certifies the negative-eigenvalue count of a
//! block at rational `t` either from the signs of the leading principal
//! minors (the generic path: all minors nonzero, count = sign changes) or,
//! when a minor vanishes, from a Sturm count of the characteristic
//! polynomial over `(-inf, 0)`.
//!
//! Tolerances, all pinned here:
//! * `JACOBI_TOL = 1e-12` — off-diagonal Frobenius mass relative to the
//!   initial matrix norm at which the sweep loop stops;
//! * `EIG_REL_TOL = 1e-8` — relative tolerance for comparing eigenvalues
//!   (interlacing, reflection symmetry, exact/numeric agreement);
//! * `BOUND_TOL = 1e-9` — absolute slack in the `-3t^2` lower-bound scan.

use crate::matrix::{bareiss_leading_minors, charpoly, RatMatrix};
use crate::rational::{rat_sign, rat_to_f64, Rational};
use crate::rossi::{build_balanced, build_symmetric};
use crate::sturm::{sturm_count, sturm_count_with_multiplicity, Endpoint};
use crate::Error;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

pub const JACOBI_TOL: f64 = 1e-12;
pub const EIG_REL_TOL: f64 = 1e-8;
pub const BOUND_TOL: f64 = 1e-9;

/// Jacobi sweep cap; quadratic convergence makes this generous for any
/// size this crate builds.
const JACOBI_MAX_SWEEPS: usize = 64;

/// Eigenvalues of a dense symmetric matrix (row-major) by cyclic Jacobi
/// rotations, ascending.  Stops once the off-diagonal Frobenius mass drops
/// below `JACOBI_TOL` relative to the initial Frobenius norm.
pub fn jacobi_eigenvalues(mut a: Vec<f64>, n: usize) -> Result<Vec<f64>, Error> {
    assert_eq!(a.len(), n * n);
    if n == 1 {
        return Ok(vec![a[0]]);
    }
    let norm: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Ok(vec![0.0; n]);
    }
    let target = JACOBI_TOL * norm;
    for _ in 0..JACOBI_MAX_SWEEPS {
        let off: f64 = {
            let mut s = 0.0;
            for p in 0..n {
                for q in p + 1..n {
                    s += 2.0 * a[p * n + q] * a[p * n + q];
                }
            }
            s.sqrt()
        };
        if off <= target {
            let mut eigs: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
            eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
            return Ok(eigs);
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for j in 0..n {
                    let ajp = a[j * n + p];
                    let ajq = a[j * n + q];
                    a[j * n + p] = c * ajp - s * ajq;
                    a[j * n + q] = s * ajp + c * ajq;
                }
                for j in 0..n {
                    let apj = a[p * n + j];
                    let aqj = a[q * n + j];
                    a[p * n + j] = c * apj - s * aqj;
                    a[q * n + j] = s * apj + c * aqj;
                }
            }
        }
    }
    Err(Error::JacobiNoConvergence(JACOBI_MAX_SWEEPS))
}

/// Eigenvalues of the block at float `t`, ascending.
pub fn eigenvalues_numeric(k: u32, t: f64) -> Result<Vec<f64>, Error> {
    let sym = build_symmetric(k);
    jacobi_eigenvalues(sym.eval_f64(t), k as usize)
}

/// Sign of an exact quantity, serialized as "+", "-", or "0".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
    #[serde(rename = "0")]
    Zero,
}

impl Sign {
    fn of_i8(s: i8) -> Sign {
        match s {
            0 => Sign::Zero,
            x if x < 0 => Sign::Minus,
            _ => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
            Sign::Zero => "0",
        })
    }
}

/// Which exact certificate produced a negative-eigenvalue count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertMethod {
    /// All leading principal minors nonzero; count = sign changes.
    MinorSigns,
    /// Some minor vanished; Sturm count of the characteristic polynomial
    /// over `(-inf, 0)` (distinct eigenvalues).
    SturmFallback,
}

impl fmt::Display for CertMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertMethod::MinorSigns => "minor-signs",
            CertMethod::SturmFallback => "sturm-fallback",
        })
    }
}

/// The balanced face at `t = p/q`, cleared to integers: every entry has
/// degree at most 4, so `q^4 B(p/q)` is an integer matrix whose leading
/// minors are the exact minors scaled by the positive factors `q^{4l}`.
fn balanced_scaled_integer(k: u32, t: &Rational) -> Vec<BigInt> {
    let b = build_balanced(k);
    let n = k as usize;
    let p = t.numer();
    let q = t.denom();
    let mut pw_p = vec![BigInt::from(1)];
    let mut pw_q = vec![BigInt::from(1)];
    for i in 1..=4usize {
        pw_p.push(&pw_p[i - 1] * p);
        pw_q.push(&pw_q[i - 1] * q);
    }
    let mut out = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let poly = b.get(r, c);
            let mut acc = BigInt::zero();
            for (s, coef) in poly.coeffs().iter().enumerate() {
                debug_assert!(coef.denom().is_one(), "balanced entries are integer polynomials");
                acc += coef.numer() * &pw_p[s] * &pw_q[4 - s];
            }
            out.push(acc);
        }
    }
    out
}

/// Exact signs of the leading principal minors of the block at rational
/// `t`.  The pivot-free integer pass covers the generic case; vanishing
/// pivots fall back to per-minor determinants.
pub fn minor_signs(k: u32, t: &Rational) -> Vec<Sign> {
    let scaled = balanced_scaled_integer(k, t);
    match bareiss_leading_minors(k as usize, scaled) {
        Some(pivots) => pivots
            .iter()
            .map(|m| Sign::of_i8(if m.is_zero() { 0 } else if m.is_negative() { -1 } else { 1 }))
            .collect(),
        None => {
            let b = build_balanced(k).eval(t);
            (1..=k as usize)
                .map(|l| Sign::of_i8(rat_sign(&b.leading_block(l).det())))
                .collect()
        }
    }
}

/// Certified count of negative eigenvalues of the block at rational `t`.
///
/// Primary path: all leading principal minors nonzero, in which case the
/// count is the number of sign changes in `(1, m_1, ..., m_k)`.  Any zero
/// minor switches to a Sturm count of the exact characteristic polynomial
/// over `(-inf, 0)` (distinct roots; the embeddable structure `t = 0` in
/// particular lands here and yields 0).
pub fn negative_count_exact(k: u32, t: &Rational) -> (usize, CertMethod) {
    let signs = minor_signs(k, t);
    if signs.iter().all(|s| *s != Sign::Zero) {
        let mut count = 0;
        let mut last = Sign::Plus; // leading 1
        for s in &signs {
            if *s != last {
                count += 1;
            }
            last = *s;
        }
        return (count, CertMethod::MinorSigns);
    }
    let cp = charpoly(&build_balanced(k).eval(t));
    let count = sturm_count(&cp, &Endpoint::NegInf, &Endpoint::Value(Rational::zero()));
    // (-inf, 0] minus a root at zero: the half-open count includes 0, so
    // subtract it back out when the block is singular at this t.
    let at_zero = cp.coeff(0).is_zero();
    (count - usize::from(at_zero), CertMethod::SturmFallback)
}

/// Sign changes in the sequence `1, m_1, ..., m_k` of nonzero minors;
/// for a matrix diagonally similar to a symmetric one this is its
/// negative-eigenvalue count (Jacobi's inertia rule).
fn minor_sign_changes(minors: &[BigInt]) -> usize {
    let mut count = 0;
    let mut last = false; // sign of the previous minor, true = negative
    for m in minors {
        let neg = m.is_negative();
        if neg != last {
            count += 1;
        }
        last = neg;
    }
    count
}

/// Exact number of eigenvalues of the block strictly below rational `x`,
/// by Jacobi's inertia rule on the integer-scaled `B(t) - x I`; `None`
/// when some leading minor vanishes (in particular whenever `x` is
/// itself an eigenvalue).
fn count_below_exact(k: u32, t: &Rational, x: &Rational) -> Option<usize> {
    let mut scaled = balanced_scaled_integer(k, t); // q^4 B(t)
    let n = k as usize;
    let shift = x.numer() * t.denom().pow(4);
    for entry in scaled.iter_mut() {
        *entry *= x.denom();
    }
    for i in 0..n {
        scaled[i * n + i] -= &shift;
    }
    let minors = bareiss_leading_minors(n, scaled)?;
    if minors.iter().any(|m| m.is_zero()) {
        return None;
    }
    Some(minor_sign_changes(&minors))
}

/// Exact count (with multiplicity) of eigenvalues of the block in the
/// band `(-tol, tol]` at rational `t`.
///
/// This certifies the hypothesis of the count invariant: the exact
/// negative count and a numeric count thresholded at `-tol` are only
/// required to agree when this returns 0.  The unique negative eigenvalue
/// shrinks roughly like `t^{2k}` relative to the rest of the spectrum, so
/// for larger `k` it genuinely enters the band and a float eigensolver
/// loses its sign — the exact certificate is then the only witness.
///
/// Primary path: two inertia counts at the band edges (cubic in `k`).
/// If a minor vanishes at either edge, falls back to a Sturm count on
/// the exact characteristic polynomial.
pub fn near_zero_exact(k: u32, t: &Rational, tol: &Rational) -> usize {
    let neg_tol = -tol.clone();
    if let (Some(hi), Some(lo)) =
        (count_below_exact(k, t, tol), count_below_exact(k, t, &neg_tol))
    {
        // Neither band edge is an eigenvalue here, so the strict counts
        // delimit (-tol, tol] exactly.
        return hi - lo;
    }
    // Work with q^4 B(p/q): integer entries keep the characteristic
    // polynomial denominator-free, and every eigenvalue scales by the
    // positive factor q^4, so the band scales along with it.
    let scaled = balanced_scaled_integer(k, t);
    let n = k as usize;
    let mut m = RatMatrix::zero(n);
    for r in 0..n {
        for c in 0..n {
            m.set(r, c, Rational::from_integer(scaled[r * n + c].clone()));
        }
    }
    let cp = charpoly(&m);
    let band = tol * Rational::from_integer(t.denom().pow(4));
    sturm_count_with_multiplicity(
        &cp,
        &Endpoint::Value(-band.clone()),
        &Endpoint::Value(band),
    )
}

/// One rung of the interlacing ladder: eigenvalues of the leading `l`-
/// and `(l+1)`-blocks with the comparison verdict.
#[derive(Clone, Debug, Serialize)]
pub struct InterlacingRecord {
    pub l: usize,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub pass: bool,
}

/// Checks Cauchy interlacing for every consecutive pair of leading
/// principal blocks of the symmetric face at float `t`, with slack
/// `EIG_REL_TOL` relative to the largest magnitude in the bigger block.
pub fn interlacing_check(k: u32, t: f64) -> Result<Vec<InterlacingRecord>, Error> {
    let sym = build_symmetric(k);
    let full = sym.eval_f64(t);
    let n = k as usize;
    let block = |l: usize| -> Vec<f64> {
        let mut a = vec![0.0; l * l];
        for r in 0..l {
            for c in 0..l {
                a[r * l + c] = full[r * n + c];
            }
        }
        a
    };
    let mut records = Vec::new();
    let mut lower = jacobi_eigenvalues(block(1), 1)?;
    for l in 1..n {
        let upper = jacobi_eigenvalues(block(l + 1), l + 1)?;
        let scale = upper.iter().fold(1.0f64, |m, x| m.max(x.abs()));
        let tol = EIG_REL_TOL * scale;
        let mut pass = true;
        for (i, lam) in lower.iter().enumerate() {
            if !(upper[i] - tol <= *lam && *lam <= upper[i + 1] + tol) {
                pass = false;
            }
        }
        records.push(InterlacingRecord { l, lower: lower.clone(), upper: upper.clone(), pass });
        lower = upper;
    }
    Ok(records)
}

/// One cell of the lower-bound scan.
#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub k: u32,
    pub t: f64,
    pub min_eigenvalue: f64,
    pub bound: f64,
    pub margin: f64,
    pub pass: bool,
}

/// Minimum eigenvalue of block `k` at `t` against the conjectural lower
/// bound `-3t^2`, with `BOUND_TOL` slack.
pub fn scan_cell(k: u32, t: f64) -> Result<ScanRow, Error> {
    let eigs = eigenvalues_numeric(k, t)?;
    let min = eigs[0];
    let bound = -3.0 * t * t;
    let margin = min - bound;
    Ok(ScanRow { k, t, min_eigenvalue: min, bound, margin, pass: margin >= -BOUND_TOL })
}

/// Scans all blocks `1..=k_max` over a `t` grid, row order (k, t).
pub fn bound_scan(k_max: u32, t_grid: &[f64]) -> Result<Vec<ScanRow>, Error> {
    let mut rows = Vec::with_capacity(k_max as usize * t_grid.len());
    for k in 1..=k_max {
        for &t in t_grid {
            rows.push(scan_cell(k, t)?);
        }
    }
    Ok(rows)
}

/// Largest pairwise eigenvalue deviation between the blocks at `t` and
/// `-t`; the spectra agree exactly for the blocks themselves, so this is
/// reported as data, never asserted.
pub fn reflection_deviation(k: u32, t: f64) -> Result<f64, Error> {
    let plus = eigenvalues_numeric(k, t)?;
    let minus = eigenvalues_numeric(k, -t)?;
    Ok(plus
        .iter()
        .zip(minus.iter())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}

/// Deformation parameter as given to a report: exact rational or float.
#[derive(Clone, Debug, PartialEq)]
pub enum TParam {
    Exact(Rational),
    Float(f64),
}

impl TParam {
    pub fn to_f64(&self) -> f64 {
        match self {
            TParam::Exact(r) => rat_to_f64(r),
            TParam::Float(f) => *f,
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            TParam::Exact(r) => Some(r),
            TParam::Float(_) => None,
        }
    }
}

impl fmt::Display for TParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TParam::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            TParam::Float(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for TParam {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            TParam::Exact(_) => s.serialize_str(&self.to_string()),
            TParam::Float(x) => s.serialize_f64(*x),
        }
    }
}

/// Spectral summary of one block at one parameter value.  The exact
/// fields are present only when `t` was given as a rational.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub k: u32,
    pub t: TParam,
    pub eigenvalues: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub negative_count_exact: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certification: Option<CertMethod>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minor_signs: Option<Vec<Sign>>,
    pub min_eigenvalue: f64,
    /// `min_eigenvalue >= -3t^2 - BOUND_TOL`.
    pub bound_check: bool,
    /// The deformation family is defined for |t| < 1; values outside are
    /// computed anyway but flagged.
    pub in_model: bool,
}

/// Builds the full spectral report for one block.
pub fn spectrum_report(k: u32, t: &TParam) -> Result<SpectrumReport, Error> {
    let tf = t.to_f64();
    let eigenvalues = eigenvalues_numeric(k, tf)?;
    let min_eigenvalue = eigenvalues[0];
    let (neg, cert, signs) = match t.as_exact() {
        Some(r) => {
            let (n, c) = negative_count_exact(k, r);
            (Some(n), Some(c), Some(minor_signs(k, r)))
        }
        None => (None, None, None),
    };
    Ok(SpectrumReport {
        k,
        t: t.clone(),
        eigenvalues,
        negative_count_exact: neg,
        certification: cert,
        minor_signs: signs,
        min_eigenvalue,
        bound_check: min_eigenvalue >= -3.0 * tf * tf - BOUND_TOL,
        in_model: tf.abs() < 1.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use crate::sturm::isolate_real_roots;

    #[test]
    fn test_jacobi_small() {
        // [[2,1],[1,2]] has eigenvalues 1 and 3
        let eigs = jacobi_eigenvalues(vec![2.0, 1.0, 1.0, 2.0], 2).unwrap();
        assert!((eigs[0] - 1.0).abs() < 1e-12);
        assert!((eigs[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn test_eigenvalues_k1() {
        // single block entry -3t^2 at t = 0.5
        let eigs = eigenvalues_numeric(1, 0.5).unwrap();
        assert_eq!(eigs.len(), 1);
        assert!((eigs[0] + 0.75).abs() < 1e-12);
    }

    #[test]
    fn test_eigenvalues_k2_embeddable() {
        // t = 0: diagonal (0, 12)
        let eigs = eigenvalues_numeric(2, 0.0).unwrap();
        assert!((eigs[0] - 0.0).abs() < 1e-12);
        assert!((eigs[1] - 12.0).abs() < 1e-12);
    }

    #[test]
    fn test_exactly_one_negative_numeric() {
        // Pairs whose unique negative eigenvalue is safely below -1e-8;
        // it decays roughly like t^{2k}, so small t with large k would
        // push it inside the threshold band (see the guard test below).
        for k in [1u32, 2, 3, 5, 8] {
            for t in [1.0 / 3.0, 0.5, 0.9] {
                let eigs = eigenvalues_numeric(k, t).unwrap();
                assert_eq!(eigs.iter().filter(|&&x| x < -1e-8).count(), 1, "k={k} t={t}");
            }
        }
    }

    #[test]
    fn test_near_zero_guard() {
        // At k=12, t=1/3 the negative eigenvalue sits inside (-1e-8, 0):
        // the float count misses it, the exact certificate does not, and
        // the band count certifies that this is the guarded case where
        // the two are allowed to disagree.
        let t = rat(1, 3);
        let tol = rat(1, 100_000_000);
        assert_eq!(negative_count_exact(12, &t), (1, CertMethod::MinorSigns));
        assert_eq!(near_zero_exact(12, &t, &tol), 1);
        let eigs = eigenvalues_numeric(12, 1.0 / 3.0).unwrap();
        assert_eq!(eigs.iter().filter(|&&x| x < -1e-8).count(), 0);

        // A well-separated case: empty band, counts must agree.
        let t2 = rat(1, 2);
        assert_eq!(near_zero_exact(4, &t2, &tol), 0);
        let eigs2 = eigenvalues_numeric(4, 0.5).unwrap();
        assert_eq!(eigs2.iter().filter(|&&x| x < -1e-8).count(), 1);

        // t = 0 puts the kernel eigenvalue exactly in the band.
        assert_eq!(near_zero_exact(3, &rat_int(0), &tol), 1);
    }

    #[test]
    fn test_negative_count_exact_cases() {
        assert_eq!(negative_count_exact(7, &rat(1, 3)), (1, CertMethod::MinorSigns));
        assert_eq!(negative_count_exact(2, &rat(-1, 2)), (1, CertMethod::MinorSigns));
        // t = 0 has a zero minor and no negative eigenvalues
        assert_eq!(negative_count_exact(3, &rat_int(0)), (0, CertMethod::SturmFallback));
    }

    #[test]
    fn test_minor_signs_pattern() {
        // + ... + - for t != 0
        let signs = minor_signs(5, &rat(1, 2));
        assert_eq!(signs.len(), 5);
        for s in &signs[..4] {
            assert_eq!(*s, Sign::Plus);
        }
        assert_eq!(signs[4], Sign::Minus);
        // all zero at t = 0 except none — every minor vanishes
        let zeros = minor_signs(4, &rat_int(0));
        assert!(zeros.iter().all(|s| *s == Sign::Zero));
    }

    #[test]
    fn test_jacobi_agrees_with_sturm_roots() {
        // Numeric eigenvalues vs exact charpoly roots, k = 4, t = 1/2.
        let k = 4u32;
        let t = rat(1, 2);
        let cp = charpoly(&build_balanced(k).eval(&t));
        let brackets = isolate_real_roots(&cp, &rat(1, 1i64 << 40));
        assert_eq!(brackets.len(), k as usize); // distinct eigenvalues here
        let eigs = eigenvalues_numeric(k, 0.5).unwrap();
        for (br, lam) in brackets.iter().zip(eigs.iter()) {
            let mid = (rat_to_f64(&br.0) + rat_to_f64(&br.1)) / 2.0;
            let scale = lam.abs().max(1.0);
            assert!((mid - lam).abs() / scale < EIG_REL_TOL, "{mid} vs {lam}");
        }
    }

    #[test]
    fn test_interlacing_small() {
        for (k, t) in [(2u32, 0.0), (3, 0.4), (6, 0.9)] {
            for rec in interlacing_check(k, t).unwrap() {
                assert!(rec.pass, "k={k} t={t} l={}", rec.l);
            }
        }
    }

    #[test]
    fn test_scan_k1_margin_zero() {
        // block 1 is exactly -3t^2, so the margin is 0 up to roundoff
        let row = scan_cell(1, 0.5).unwrap();
        assert!(row.pass);
        assert!(row.margin.abs() < 1e-12);
        let row2 = scan_cell(6, 0.7).unwrap();
        assert!(row2.pass);
    }

    #[test]
    fn test_reflection_deviation_small() {
        for k in [2u32, 5] {
            let dev = reflection_deviation(k, 0.6).unwrap();
            let scale = eigenvalues_numeric(k, 0.6).unwrap()[k as usize - 1].abs().max(1.0);
            assert!(dev / scale < 1e-9, "k={k}: {dev}");
        }
    }

    #[test]
    fn test_charpoly_residual_at_numeric_eigenvalues() {
        // The exact characteristic polynomial annihilates each numeric
        // eigenvalue up to a first-order error budget: coefficient-sized
        // roundoff in the evaluation itself plus the backward error of the
        // eigensolver (|p'| times eps times the spectral norm).  A flat
        // threshold would be dishonest here — the coefficients are huge
        // and one root is tiny, so |p(lambda)| is large in absolute terms
        // even for eigenvalues correct to machine precision.
        for k in [2u32, 5, 8] {
            for t in [rat(1, 3), rat(1, 2)] {
                let cp = charpoly(&build_balanced(k).eval(&t));
                let eigs = eigenvalues_numeric(k, rat_to_f64(&t)).unwrap();
                let norm = eigs.iter().fold(0.0f64, |m, x| m.max(x.abs()));
                for lam in &eigs {
                    let la = lam.abs();
                    let mut eval_mag = 0.0;
                    let mut deriv_mag = 0.0;
                    for (j, c) in cp.coeffs().iter().enumerate() {
                        let cj = rat_to_f64(c).abs();
                        eval_mag += cj * la.powi(j as i32);
                        if j >= 1 {
                            deriv_mag += j as f64 * cj * la.powi(j as i32 - 1);
                        }
                    }
                    let budget =
                        64.0 * k as f64 * f64::EPSILON * (eval_mag + deriv_mag * norm);
                    let residual = cp.eval_f64(*lam).abs();
                    assert!(residual <= budget, "k={k} lambda={lam}: {residual} > {budget}");
                }
            }
        }
    }

    #[test]
    fn test_spectrum_report_fields() {
        let rep = spectrum_report(5, &TParam::Exact(rat(1, 2))).unwrap();
        assert_eq!(rep.negative_count_exact, Some(1));
        assert_eq!(rep.certification, Some(CertMethod::MinorSigns));
        assert!(rep.bound_check);
        assert!(rep.in_model);
        assert_eq!(rep.eigenvalues.len(), 5);

        let float_rep = spectrum_report(3, &TParam::Float(0.25)).unwrap();
        assert_eq!(float_rep.negative_count_exact, None);
        assert!(float_rep.in_model);

        let outside = spectrum_report(2, &TParam::Float(1.5)).unwrap();
        assert!(!outside.in_model);
    }
}
