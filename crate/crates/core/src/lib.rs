//! Exact and numeric spectral analysis of the CR Paneitz operator on the
//! Rossi spheres.
//!
//! For the one-parameter family of CR structures on the unit sphere in C^2
//! indexed by a deformation parameter `t`, the (rescaled) Paneitz operator
//! decomposes into finite-dimensional blocks indexed by `k >= 1`.  Each
//! block acts on a chain of spherical harmonics and is pentadiagonal in the
//! chain basis.  This crate builds those blocks in two exact faces
//! (symmetric-with-radicals and balanced integer-polynomial), certifies
//! spectral facts about them with integer/rational arithmetic, and
//! cross-checks everything both against a brute-force differential-operator
//! oracle on actual harmonic polynomials and against a numeric eigensolver.
//!
//! Modules:
//! * [`rational`], [`poly`], [`matrix`], [`sturm`] — exact arithmetic:
//!   rationals, Gaussian rationals, polynomials in `t`, polynomial and
//!   rational matrices, fraction-free determinants, characteristic
//!   polynomials, Sturm root counting.
//! * [`rossi`] — the band coefficients and the pentadiagonal blocks.
//! * [`harmonic`] — polynomials on C^2, the operators `Z_1`, `Z_1bar`, the
//!   Kohn Laplacians, and the Paneitz block recovered from first principles.
//! * [`spectrum`] — Jacobi eigensolver, exact negative-eigenvalue counts,
//!   interlacing and lower-bound scans.
//! * [`verify`] — the named check suite used by the CLI and the acceptance
//!   tests.

pub mod harmonic;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod rossi;
pub mod spectrum;
pub mod sturm;
pub mod verify;

pub use matrix::{charpoly, PolyMatrix, RatMatrix};
pub use poly::Poly;
pub use rational::{parse_rational, GaussianRational, Rational};
pub use rossi::{
    band_coeff, build_balanced, build_symmetric, coeff_relation_holds, det_shifted,
    eta_closed_form, BandMatrix, RadicalEntry, SymmetricMatrix,
};
pub use spectrum::{
    bound_scan, eigenvalues_numeric, interlacing_check, near_zero_exact, negative_count_exact,
    spectrum_report, CertMethod, Sign, SpectrumReport, TParam,
};
pub use sturm::{sturm_count, Endpoint};
pub use verify::{run_suite, suite_passed, CheckResult, SuiteCaps};

/// Errors surfaced by the library.  Precondition violations (`k == 0`,
/// malformed matrices) panic instead; these variants are for conditions a
/// correct caller can still run into.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A leading-minor index outside `1..=k` was requested.
    #[error("minor index l = {l} out of range 1..={k}")]
    MinorOutOfRange { k: u32, l: u32 },
    /// The Jacobi eigensolver did not converge within the sweep cap.
    #[error("jacobi sweep cap ({0} sweeps) exceeded without convergence")]
    JacobiNoConvergence(usize),
    /// The differential-operator oracle produced something outside the
    /// chain subspace; this indicates an internal inconsistency and is
    /// always fatal.
    #[error("oracle expansion failed: {0}")]
    OracleInconsistency(String),
}
