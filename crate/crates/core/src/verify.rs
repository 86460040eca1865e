//! The named verification suite: every closed-form identity and spectral
//! claim the library implements, bundled into checks with stable names,
//! pass/fail status, and a witness string.
//!
//! Most checks are gates — a failure is a defect.  Two are exploratory
//! (`bound-scan`, `reflection-symmetry`): they record observations that
//! the deformation family appears to satisfy but that nothing proves at
//! this scale, so their outcome is data.  [`suite_passed`] ignores
//! non-gate checks; a caller that wants to surface their violations reads
//! the witness.

use serde::Serialize;

use crate::harmonic::{bidegree_basis, inner_product, oracle_matrix, ChainBasis};
use crate::poly::Poly;
use crate::rational::{rat, rat_int};
use crate::rossi::{
    band_coeff, build_balanced, coeff_relation_holds, det_shifted, eta_closed_form,
};
use crate::spectrum::{
    bound_scan, eigenvalues_numeric, interlacing_check, near_zero_exact, negative_count_exact,
    reflection_deviation, EIG_REL_TOL,
};

/// Numeric threshold for counting an eigenvalue as negative, and the
/// half-width of the near-zero band inside which the exact and numeric
/// counts are excused from agreeing.
pub const NEG_COUNT_TOL: f64 = 1e-8;

/// Screening margin for the near-zero band: the exact band certificate is
/// only consulted when some numeric eigenvalue has magnitude below this.
/// It is 100x the band itself, far above the eigensolver's error for any
/// matrix this suite builds, so no in-band eigenvalue can slip past it.
const NEAR_ZERO_SCREEN: f64 = 1e-6;

/// Outcome of a single named check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    /// Stable identifier, kebab-case.
    pub name: &'static str,
    pub passed: bool,
    /// Whether the check gates the suite.  Exploratory checks record
    /// their observation in `witness` and never fail the run.
    pub gate: bool,
    /// What was verified, or how it failed.
    pub witness: String,
}

impl CheckResult {
    fn pass(name: &'static str, witness: String) -> Self {
        CheckResult { name, passed: true, gate: true, witness }
    }

    fn fail(name: &'static str, witness: String) -> Self {
        CheckResult { name, passed: false, gate: true, witness }
    }

    fn data(name: &'static str, passed: bool, witness: String) -> Self {
        CheckResult { name, passed, gate: false, witness }
    }
}

/// Size caps for the suite, one per check.  [`SuiteCaps::default`] is the
/// full suite; [`SuiteCaps::restricted`] clamps everything by one bound
/// for quick runs.
#[derive(Clone, Copy, Debug)]
pub struct SuiteCaps {
    /// Shifted-determinant identities, `k <= 6` (no references beyond 6).
    pub det_shift_k_max: u32,
    /// Minor closed form `eta_{k,l}` for all `1 <= l <= k`.
    pub minors_k_max: u32,
    /// Operator-oracle equivalence.
    pub oracle_k_max: u32,
    /// Exact negative-eigenvalue count over the rational t sample.
    pub negcount_k_max: u32,
    /// Harmonic-law sweep over bidegrees with `p + q` up to this.
    pub harmonic_degree_max: u32,
    /// Chain orthogonality and norm ratios.
    pub chain_k_max: u32,
    /// Embeddable-limit diagonal.
    pub diag_k_max: u32,
    /// Interlacing ladders.
    pub interlacing_k_max: u32,
    /// Band-coefficient identity.
    pub coeff_k_max: u32,
    /// Lower-bound scan (exploratory).
    pub scan_k_max: u32,
}

impl Default for SuiteCaps {
    fn default() -> Self {
        SuiteCaps {
            det_shift_k_max: 6,
            minors_k_max: 12,
            oracle_k_max: 5,
            negcount_k_max: 30,
            harmonic_degree_max: 8,
            chain_k_max: 5,
            diag_k_max: 30,
            interlacing_k_max: 15,
            coeff_k_max: 20,
            scan_k_max: 20,
        }
    }
}

impl SuiteCaps {
    /// Clamps every per-check bound by `k_max` (harmonic degrees by
    /// `2 k_max`, matching the top chain degree the restricted suite
    /// touches).  The caps never grow past the defaults.
    pub fn restricted(k_max: u32) -> Self {
        let d = SuiteCaps::default();
        SuiteCaps {
            det_shift_k_max: d.det_shift_k_max.min(k_max),
            minors_k_max: d.minors_k_max.min(k_max),
            oracle_k_max: d.oracle_k_max.min(k_max),
            negcount_k_max: d.negcount_k_max.min(k_max),
            harmonic_degree_max: d.harmonic_degree_max.min(2 * k_max),
            chain_k_max: d.chain_k_max.min(k_max),
            diag_k_max: d.diag_k_max.min(k_max),
            interlacing_k_max: d.interlacing_k_max.min(k_max),
            coeff_k_max: d.coeff_k_max.min(k_max),
            scan_k_max: d.scan_k_max.min(k_max),
        }
    }
}

/// Polynomial with the given coefficients on the even powers
/// `t^0, t^2, t^4, ...` and zeros in between.
fn even_poly(even_coeffs: &[i64]) -> Poly {
    let mut coeffs = Vec::with_capacity(2 * even_coeffs.len());
    for &c in even_coeffs {
        coeffs.push(rat_int(c));
        coeffs.push(rat_int(0));
    }
    Poly::new(coeffs)
}

/// Reference value of `det(P_k(t) + 3t^2 I)` for `k <= 6`, in the shape
/// `C * t^2 * (1 - t^2)^2 * (palindromic even factor)`.
pub fn shifted_det_reference(k: u32) -> Option<Poly> {
    let (c, inner): (i64, &[i64]) = match k {
        1 => return Some(Poly::zero()),
        2 => (36, &[1]),
        3 => (576, &[15, 58, 15]),
        4 => (6480, &[1680, 6549, 15926, 6549, 1680]),
        5 => (995328, &[44100, 172683, 422712, 825970, 422712, 172683, 44100]),
        6 => (
            4536000,
            &[
                95800320, 376277184, 924268539, 1815582548, 3114137570, 1815582548, 924268539,
                376277184, 95800320,
            ],
        ),
        _ => return None,
    };
    // t^2 (1 - t^2)^2 = t^2 - 2 t^4 + t^6
    let base = Poly::from_coeffs(&[0, 0, 1, 0, -2, 0, 1]);
    Some(&(&base * &even_poly(inner)) * &Poly::constant(rat_int(c)))
}

/// The shifted determinants `det(P_k + 3t^2 I)` match the six reference
/// polynomials exactly.
pub fn check_shifted_determinants(caps: &SuiteCaps) -> CheckResult {
    const NAME: &str = "shifted-determinants";
    let shift = Poly::from_coeffs(&[0, 0, 3]);
    let k_max = caps.det_shift_k_max.min(6);
    for k in 1..=k_max {
        let got = det_shifted(k, &shift);
        let want = shifted_det_reference(k).expect("references cover k <= 6");
        if got != want {
            return CheckResult::fail(
                NAME,
                format!("k={k}: det_shifted = {got}, reference = {want}"),
            );
        }
    }
    CheckResult::pass(NAME, format!("{k_max} determinant identities hold exactly"))
}

/// Every leading principal minor of the balanced face equals the closed
/// form `eta_{k,l}` as a polynomial identity.
pub fn check_minor_closed_form(caps: &SuiteCaps) -> CheckResult {
    const NAME: &str = "minor-closed-form";
    let mut total = 0usize;
    for k in 1..=caps.minors_k_max {
        let minors = build_balanced(k).leading_minors();
        for l in 1..=k {
            let want = eta_closed_form(k, l).expect("l is in range");
            let got = &minors[l as usize - 1];
            if *got != want {
                return CheckResult::fail(
                    NAME,
                    format!("k={k} l={l}: minor = {got}, closed form = {want}"),
                );
            }
            total += 1;
        }
    }
    CheckResult::pass(NAME, format!("{total} minors match the closed form"))
}

/// The matrix recovered by applying the operator expression to the chain
/// equals the balanced face entrywise.
pub fn check_operator_oracle(caps: &SuiteCaps) -> CheckResult {
    const NAME: &str = "operator-oracle";
    for k in 1..=caps.oracle_k_max {
        let oracle = match oracle_matrix(k) {
            Ok(m) => m,
            Err(e) => return CheckResult::fail(NAME, format!("k={k}: {e}")),
        };
        let built = build_balanced(k);
        if oracle != built {
            let n = k as usize;
            for r in 0..n {
                for c in 0..n {
                    if oracle.get(r, c) != built.get(r, c) {
                        return CheckResult::fail(
                            NAME,
                            format!(
                                "k={k} entry ({r},{c}): oracle = {}, band formula = {}",
                                oracle.get(r, c),
                                built.get(r, c)
                            ),
                        );
                    }
                }
            }
        }
    }
    CheckResult::pass(
        NAME,
        format!("blocks up to k={} rebuilt from the operators", caps.oracle_k_max),
    )
}

/// Exactly one negative eigenvalue at every sampled rational `t != 0`,
/// certified exactly; the numeric count (threshold [`NEG_COUNT_TOL`])
/// must agree whenever no exact eigenvalue lies in the near-zero band.
pub fn check_negative_count(caps: &SuiteCaps) -> CheckResult {
    const NAME: &str = "negative-count";
    let samples: [(i64, i64); 8] =
        [(1, 10), (-1, 10), (1, 3), (-1, 3), (1, 2), (-1, 2), (9, 10), (-9, 10)];
    let band = rat(1, 100_000_000);
    let mut compared = 0usize;
    let mut guarded = 0usize;
    for k in 1..=caps.negcount_k_max {
        for (p, q) in samples {
            let t = rat(p, q);
            let (count, _) = negative_count_exact(k, &t);
            if count != 1 {
                return CheckResult::fail(
                    NAME,
                    format!("k={k} t={p}/{q}: exact negative count = {count}, expected 1"),
                );
            }
            let eigs = match eigenvalues_numeric(k, p as f64 / q as f64) {
                Ok(e) => e,
                Err(e) => return CheckResult::fail(NAME, format!("k={k} t={p}/{q}: {e}")),
            };
            // The unique negative eigenvalue decays like t^{2k} relative
            // to the rest of the spectrum, so for large k and small t it
            // genuinely enters the band around zero where a float count
            // cannot see its sign; the count invariant only binds the
            // numeric side outside that band.
            if eigs.iter().any(|x| x.abs() < NEAR_ZERO_SCREEN)
                && near_zero_exact(k, &t, &band) > 0
            {
                guarded += 1;
                continue;
            }
            let numeric = eigs.iter().filter(|&&x| x < -NEG_COUNT_TOL).count();
            if numeric != 1 {
                return CheckResult::fail(
                    NAME,
                    format!(
                        "k={k} t={p}/{q}: numeric count {numeric} with min eigenvalue {:+.3e}",
                        eigs[0]
                    ),
                );
            }
            compared += 1;
        }
    }
    CheckResult::pass(
        NAME,
        format!(
            "{} pairs certified exactly; numeric count agreed on {compared}, \
             {guarded} had an eigenvalue inside the near-zero band",
            compared + guarded
        ),
    )
}

/// Dimension and eigenvalue laws on every bidegree space with
/// `p + q <= harmonic_degree_max`, plus bidegree bookkeeping and
/// harmonicity preservation for the raising and lowering operators.
pub fn check_harmonic_laws(caps: &SuiteCaps) -> CheckResult {
    const NAME: &str = "harmonic-laws";
    let mut elements = 0usize;
    let mut spaces = 0usize;
    for total in 0..=caps.harmonic_degree_max {
        for p in 0..=total {
            let q = total - p;
            let basis = bidegree_basis(p, q);
            if basis.len() != (p + q + 1) as usize {
                return CheckResult::fail(
                    NAME,
                    format!("dim of bidegree ({p},{q}) space = {}, expected {}", basis.len(), p + q + 1),
                );
            }
            spaces += 1;
            for f in &basis {
                if !f.is_harmonic() {
                    return CheckResult::fail(NAME, format!("({p},{q}) basis element not harmonic"));
                }
                let box_want = f.scale_rat(&rat_int((p as i64 + 1) * q as i64));
                if f.box_b() != box_want {
                    return CheckResult::fail(
                        NAME,
                        format!("({p},{q}): box_b eigenvalue differs from (p+1)q = {}", (p + 1) * q),
                    );
                }
                let boxbar_want = f.scale_rat(&rat_int(p as i64 * (q as i64 + 1)));
                if f.box_b_bar() != boxbar_want {
                    return CheckResult::fail(
                        NAME,
                        format!("({p},{q}): conjugate box eigenvalue differs from p(q+1) = {}", p * (q + 1)),
                    );
                }
                let down = f.z1();
                if !down.is_zero()
                    && (!down.is_harmonic() || down.bidegree() != Some((p - 1, q + 1)))
                {
                    return CheckResult::fail(
                        NAME,
                        format!("({p},{q}): lowering image not harmonic of bidegree ({},{})", p - 1, q + 1),
                    );
                }
                let up = f.z1bar();
                if !up.is_zero() && (!up.is_harmonic() || up.bidegree() != Some((p + 1, q - 1))) {
                    return CheckResult::fail(
                        NAME,
                        format!("({p},{q}): raising image not harmonic of bidegree ({},{})", p + 1, q - 1),
                    );
                }
                elements += 1;
            }
        }
    }
    CheckResult::pass(NAME, format!("{elements} basis elements across {spaces} bidegrees"))
}

/// The chain vectors are pairwise orthogonal and their squared-norm
/// ratios are the exact band-coefficient products.
pub fn check_chain_structure(caps: &SuiteCaps) -> CheckResult {
    const NAME: &str = "chain-structure";
    let mut ratios = 0usize;
    for k in 1..=caps.chain_k_max {
        let chain = ChainBasis::new(k);
        let n = chain.u.len();
        for (i, u) in chain.u.iter().enumerate() {
            let i1 = i as u32 + 1;
            if u.is_zero() || !u.is_harmonic() || u.bidegree() != Some(ChainBasis::bidegree_of(k, i1)) {
                return CheckResult::fail(NAME, format!("k={k}: chain vector u_{i1} malformed"));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if !inner_product(&chain.u[i], &chain.u[j]).is_zero() {
                    return CheckResult::fail(
                        NAME,
                        format!("k={k}: <u_{}, u_{}> != 0", i + 1, j + 1),
                    );
                }
            }
        }
        for i in 0..n - 1 {
            let hi = inner_product(&chain.u[i + 1], &chain.u[i + 1]);
            let lo = inner_product(&chain.u[i], &chain.u[i]);
            if !hi.is_real() || !lo.is_real() || lo.re == rat_int(0) {
                return CheckResult::fail(NAME, format!("k={k}: norm of u_{} degenerate", i + 1));
            }
            let i1 = i as i64 + 1;
            let want = rat_int(band_coeff(k, 2 * i1 + 1) * band_coeff(k, 2 * i1 + 2));
            if &hi.re / &lo.re != want {
                return CheckResult::fail(
                    NAME,
                    format!(
                        "k={k}: |u_{}|^2 / |u_{}|^2 = {}, expected {want}",
                        i + 2,
                        i + 1,
                        &hi.re / &lo.re
                    ),
                );
            }
            ratios += 1;
        }
    }
    CheckResult::pass(
        NAME,
        format!("chains up to k={}: orthogonal, {ratios} norm ratios exact", caps.chain_k_max),
    )
}

/// At `t = 0` the balanced face is diagonal with the exact non-negative
/// entries `c_k(2i) c_k(2i+1)`.
pub fn check_embeddable_diagonal(caps: &SuiteCaps) -> CheckResult {
    const NAME: &str = "embeddable-diagonal";
    for k in 1..=caps.diag_k_max {
        let m = build_balanced(k).eval(&rat_int(0));
        let n = k as usize;
        for r in 0..n {
            for c in 0..n {
                let got = m.get(r, c);
                if r != c {
                    if *got != rat_int(0) {
                        return CheckResult::fail(
                            NAME,
                            format!("k={k}: off-diagonal ({r},{c}) = {got} at t=0"),
                        );
                    }
                    continue;
                }
                let i = r as i64 + 1;
                let want = band_coeff(k, 2 * i) * band_coeff(k, 2 * i + 1);
                if want < 0 || *got != rat_int(want) {
                    return CheckResult::fail(
                        NAME,
                        format!("k={k}: diagonal {i} = {got}, expected {want} >= 0"),
                    );
                }
            }
        }
    }
    CheckResult::pass(
        NAME,
        format!("diagonal embeddable limit confirmed up to k={}", caps.diag_k_max),
    )
}

/// Eigenvalues of each leading sub-block interlace those of the next.
pub fn check_interlacing(caps: &SuiteCaps) -> CheckResult {
    const NAME: &str = "interlacing";
    let mut rungs = 0usize;
    for k in 1..=caps.interlacing_k_max {
        for t in [0.3, 0.7] {
            let records = match interlacing_check(k, t) {
                Ok(r) => r,
                Err(e) => return CheckResult::fail(NAME, format!("k={k} t={t}: {e}")),
            };
            for rec in records {
                if !rec.pass {
                    return CheckResult::fail(
                        NAME,
                        format!(
                            "k={k} t={t} l={}: {:?} does not interlace {:?}",
                            rec.l, rec.lower, rec.upper
                        ),
                    );
                }
                rungs += 1;
            }
        }
    }
    CheckResult::pass(NAME, format!("{rungs} interlacing rungs within tolerance"))
}

/// The four-term band-coefficient identity, exact over a window that
/// extends well past both zeros.
pub fn check_coefficient_identity(caps: &SuiteCaps) -> CheckResult {
    const NAME: &str = "coefficient-identity";
    let mut count = 0usize;
    for k in 1..=caps.coeff_k_max {
        for l in -10..=(2 * k as i64 + 10) {
            if !coeff_relation_holds(k, l) {
                return CheckResult::fail(NAME, format!("identity fails at k={k}, l={l}"));
            }
            count += 1;
        }
    }
    CheckResult::pass(NAME, format!("{count} instances of the four-term identity"))
}

/// Exploratory: minimum eigenvalue against the `-3t^2` floor on a grid.
/// Violations are reported as data, not as a suite failure.
pub fn check_bound_scan(caps: &SuiteCaps) -> CheckResult {
    const NAME: &str = "bound-scan";
    let grid: Vec<f64> = (1..=19).map(|i| i as f64 * 0.05).collect();
    let rows = match bound_scan(caps.scan_k_max, &grid) {
        Ok(r) => r,
        Err(e) => return CheckResult::data(NAME, false, format!("scan aborted: {e}")),
    };
    let violations: Vec<String> = rows
        .iter()
        .filter(|r| !r.pass)
        .map(|r| format!("k={} t={}: min {:+.6e} < {:+.6e}", r.k, r.t, r.min_eigenvalue, r.bound))
        .collect();
    if violations.is_empty() {
        CheckResult::data(
            NAME,
            true,
            format!("{} cells, min eigenvalue never below -3t^2 - 1e-9", rows.len()),
        )
    } else {
        CheckResult::data(NAME, false, violations.join("; "))
    }
}

/// Exploratory: the spectrum looks even in `t`.  Nothing at this scale
/// proves it, so the largest deviation across a sample is recorded as
/// data.
pub fn check_reflection_symmetry(caps: &SuiteCaps) -> CheckResult {
    const NAME: &str = "reflection-symmetry";
    let mut worst = 0.0f64;
    let mut cells = 0usize;
    for k in [1u32, 2, 5, 10, 15] {
        if k > caps.interlacing_k_max.max(1) {
            continue;
        }
        for t in [0.25, 0.6, 0.85] {
            let dev = match reflection_deviation(k, t) {
                Ok(d) => d,
                Err(e) => return CheckResult::data(NAME, false, format!("k={k} t={t}: {e}")),
            };
            let scale = match eigenvalues_numeric(k, t) {
                Ok(e) => e.last().map(|x| x.abs()).unwrap_or(1.0).max(1.0),
                Err(_) => 1.0,
            };
            worst = worst.max(dev / scale);
            cells += 1;
        }
    }
    CheckResult::data(
        NAME,
        worst < EIG_REL_TOL,
        format!("largest relative spectral deviation under t -> -t over {cells} cells: {worst:.3e}"),
    )
}

/// Runs every check at the given caps, gates first.
pub fn run_suite(caps: &SuiteCaps) -> Vec<CheckResult> {
    vec![
        check_shifted_determinants(caps),
        check_minor_closed_form(caps),
        check_operator_oracle(caps),
        check_negative_count(caps),
        check_harmonic_laws(caps),
        check_chain_structure(caps),
        check_embeddable_diagonal(caps),
        check_interlacing(caps),
        check_coefficient_identity(caps),
        check_bound_scan(caps),
        check_reflection_symmetry(caps),
    ]
}

/// Whether every gating check passed.
pub fn suite_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|c| !c.gate || c.passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_shifted_det_reference_shape() {
        // spot values: k=2 reference at t=1 vanishes, at t=1/2 is 36/4 * 9/16
        let p = shifted_det_reference(2).unwrap();
        assert!(p.eval(&rat_int(1)).eq(&rat_int(0)));
        assert_eq!(p.eval(&rat(1, 2)), rat(81, 16));
        assert!(shifted_det_reference(7).is_none());
        assert_eq!(p, Poly::from_coeffs(&[0, 0, 36, 0, -72, 0, 36]));
        // every reference is even in t and non-negative on (-1, 1)
        for k in 1..=6 {
            let r = shifted_det_reference(k).unwrap();
            for (j, c) in r.coeffs().iter().enumerate() {
                if j % 2 == 1 {
                    assert!(c.eq(&rat_int(0)), "k={k}: odd coefficient at {j}");
                }
            }
            for num in -9i64..=9 {
                assert!(r.eval(&rat(num, 10)) >= rat_int(0), "k={k} at t={num}/10");
            }
        }
    }

    #[test]
    fn test_reference_detects_sign_mutation() {
        // Flipping the sign of a single band entry must break the
        // shifted-determinant identity, so the check has teeth.
        let mut m = build_balanced(2);
        let flipped = m.get(0, 1) * &Poly::constant(rat_int(-1));
        m.set(0, 1, flipped);
        let det = m.add_shift(&Poly::from_coeffs(&[0, 0, 3])).det();
        assert_ne!(det, shifted_det_reference(2).unwrap());
    }

    #[test]
    fn test_restricted_suite_passes() {
        let caps = SuiteCaps::restricted(3);
        let results = run_suite(&caps);
        assert_eq!(results.len(), 11);
        for r in &results {
            assert!(r.passed, "{}: {}", r.name, r.witness);
        }
        assert!(suite_passed(&results));
    }

    #[test]
    fn test_gate_semantics() {
        let mut results = vec![
            CheckResult::pass("a", String::new()),
            CheckResult::data("b", false, "observation".into()),
        ];
        assert!(suite_passed(&results));
        results.push(CheckResult::fail("c", String::new()));
        assert!(!suite_passed(&results));
    }
}
