//! The pentadiagonal Paneitz blocks on the Rossi spheres.
//!
//! For `k >= 1` the rescaled Paneitz operator preserves a `k`-dimensional
//! chain of spherical harmonics and acts there by a symmetric five-band
//! matrix whose entries are built from the band coefficients
//!
//! ```text
//!     c_k(l) = (l - 2) (2k - l + 2),
//! ```
//!
//! zero exactly at `l = 2` and `l = 2k + 2`.  Those boundary zeros kill
//! every coupling that would leave the chain, so the block closes up.
//!
//! Two faces of the same block are provided.  In the orthonormal chain
//! basis the matrix is symmetric but its off-diagonal entries carry square
//! roots of band-coefficient products (`build_symmetric`).  Rescaling the
//! basis vectors by the accumulated radicals yields a similar matrix with
//! integer polynomial entries (`build_balanced`) — the exact face used for
//! determinants, minors and characteristic polynomials.  Both faces share
//! every leading principal minor; the closed form for those minors is
//! `eta_closed_form`.

use crate::matrix::PolyMatrix;
use crate::poly::Poly;
use crate::rational::rat_int;
use crate::Error;
use serde::{Deserialize, Serialize};

/// Band coefficient `c_k(l) = (l - 2)(2k - l + 2)`.
pub fn band_coeff(k: u32, l: i64) -> i64 {
    let k = i64::from(k);
    (l - 2) * (2 * k - l + 2)
}

/// The four-term relation `c(l) + c(l+3) = c(l+1) + c(l+2) - 4`, which is
/// what makes the five-band expansion collapse; holds for every `k, l`.
pub fn coeff_relation_holds(k: u32, l: i64) -> bool {
    band_coeff(k, l) + band_coeff(k, l + 3) == band_coeff(k, l + 1) + band_coeff(k, l + 2) - 4
}

/// One entry of the symmetric face: the value is `poly(t) * sqrt(radicand)`.
/// Invariants: `radicand >= 0`, and `radicand == 0` forces the zero entry
/// (stored as zero poly with radicand 0); a rational entry has radicand 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalEntry {
    pub poly: Poly,
    pub radicand: i64,
}

impl RadicalEntry {
    pub fn zero() -> Self {
        RadicalEntry { poly: Poly::zero(), radicand: 0 }
    }

    pub fn rational(poly: Poly) -> Self {
        if poly.is_zero() {
            return Self::zero();
        }
        RadicalEntry { poly, radicand: 1 }
    }

    /// Normalizing constructor: zero radicand or zero poly collapse to the
    /// canonical zero entry.
    pub fn radical(poly: Poly, radicand: i64) -> Self {
        assert!(radicand >= 0, "radicand must be nonnegative");
        if radicand == 0 || poly.is_zero() {
            return Self::zero();
        }
        RadicalEntry { poly, radicand }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.poly.eval_f64(t) * (self.radicand as f64).sqrt()
    }
}

/// The symmetric face: a `k x k` matrix of radical entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricMatrix {
    k: u32,
    entries: Vec<RadicalEntry>,
}

impl SymmetricMatrix {
    fn zero(k: u32) -> Self {
        let n = k as usize;
        SymmetricMatrix { k, entries: vec![RadicalEntry::zero(); n * n] }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> usize {
        self.k as usize
    }

    /// 0-based access.
    pub fn get(&self, r: usize, c: usize) -> &RadicalEntry {
        &self.entries[r * self.size() + c]
    }

    fn set(&mut self, r: usize, c: usize, v: RadicalEntry) {
        let n = self.size();
        self.entries[r * n + c] = v;
    }

    /// Dense float evaluation at `t`, row-major.
    pub fn eval_f64(&self, t: f64) -> Vec<f64> {
        self.entries.iter().map(|e| e.eval_f64(t)).collect()
    }

    fn rows(&self) -> Vec<Vec<RadicalEntry>> {
        self.entries.chunks(self.size()).map(|r| r.to_vec()).collect()
    }

    fn from_rows(rows: Vec<Vec<RadicalEntry>>) -> Option<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return None;
        }
        Some(SymmetricMatrix {
            k: n as u32,
            entries: rows.into_iter().flatten().collect(),
        })
    }
}

impl Serialize for SymmetricMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymmetricMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<RadicalEntry>>::deserialize(d)?;
        SymmetricMatrix::from_rows(rows)
            .ok_or_else(|| serde::de::Error::custom("symmetric face must be square"))
    }
}

/// Both faces of one block.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "BandMatrixWire", into = "BandMatrixWire")]
pub struct BandMatrix {
    pub k: u32,
    pub symmetric: SymmetricMatrix,
    pub balanced: PolyMatrix,
}

impl BandMatrix {
    pub fn build(k: u32) -> Self {
        BandMatrix { k, symmetric: build_symmetric(k), balanced: build_balanced(k) }
    }
}

#[derive(Serialize, Deserialize)]
struct FaceWire {
    symmetric: SymmetricMatrix,
    balanced: PolyMatrix,
}

#[derive(Serialize, Deserialize)]
struct BandMatrixWire {
    k: u32,
    face: FaceWire,
}

impl From<BandMatrix> for BandMatrixWire {
    fn from(m: BandMatrix) -> Self {
        BandMatrixWire { k: m.k, face: FaceWire { symmetric: m.symmetric, balanced: m.balanced } }
    }
}

impl TryFrom<BandMatrixWire> for BandMatrix {
    type Error = String;
    fn try_from(w: BandMatrixWire) -> Result<Self, String> {
        let n = w.k as usize;
        if w.face.symmetric.size() != n || w.face.balanced.size() != n {
            return Err(format!("face sizes do not match k = {}", w.k));
        }
        Ok(BandMatrix { k: w.k, symmetric: w.face.symmetric, balanced: w.face.balanced })
    }
}

/// `-t(1+t^2) * m` as a polynomial.
fn minus_t_one_plus_t2(m: i64) -> Poly {
    Poly::from_coeffs(&[0, -m, 0, -m])
}

/// Diagonal entry for column `i` (1-based):
/// `(1+t^2)^2 c(2i)c(2i+1) + t^2 (c(2i-2)c(2i) + c(2i+1)c(2i+3))`.
fn diagonal_poly(k: u32, i: i64) -> Poly {
    let c = |l| band_coeff(k, l);
    let a = c(2 * i) * c(2 * i + 1);
    let b = c(2 * i - 2) * c(2 * i) + c(2 * i + 1) * c(2 * i + 3);
    // (1+t^2)^2 a + t^2 b = a + (2a+b) t^2 + a t^4
    Poly::from_coeffs(&[a, 0, 2 * a + b, 0, a])
}

/// Symmetric face of the block.  Column `i` carries the five expansion
/// coefficients of the operator applied to the `i`-th chain vector:
///
/// ```text
/// M[i-2,i] =  t^2 sqrt(c(2i-3)c(2i-2)c(2i-1)c(2i))
/// M[i-1,i] = -t(1+t^2)(c(2i-2)+c(2i+1)) sqrt(c(2i-1)c(2i))
/// M[i,  i] =  (1+t^2)^2 c(2i)c(2i+1) + t^2 (c(2i-2)c(2i)+c(2i+1)c(2i+3))
/// M[i+1,i] = -t(1+t^2)(c(2i)+c(2i+3)) sqrt(c(2i+1)c(2i+2))
/// M[i+2,i] =  t^2 sqrt(c(2i+1)c(2i+2)c(2i+3)c(2i+4))
/// ```
///
/// Rows outside `1..=k` are dropped; the band-coefficient zeros at `l = 2`
/// and `l = 2k+2` make every dropped coefficient vanish anyway, which is
/// what `chain_escape_radicand` lets tests confirm.
pub fn build_symmetric(k: u32) -> SymmetricMatrix {
    assert!(k >= 1);
    let mut m = SymmetricMatrix::zero(k);
    let n = k as i64;
    let c = |l| band_coeff(k, l);
    let t2 = Poly::from_coeffs(&[0, 0, 1]);
    for i in 1..=n {
        let col = (i - 1) as usize;
        if i - 2 >= 1 {
            let rad = c(2 * i - 3) * c(2 * i - 2) * c(2 * i - 1) * c(2 * i);
            m.set((i - 3) as usize, col, RadicalEntry::radical(t2.clone(), rad));
        }
        if i - 1 >= 1 {
            let rad = c(2 * i - 1) * c(2 * i);
            let poly = minus_t_one_plus_t2(c(2 * i - 2) + c(2 * i + 1));
            m.set((i - 2) as usize, col, RadicalEntry::radical(poly, rad));
        }
        m.set(col, col, RadicalEntry::rational(diagonal_poly(k, i)));
        if i + 1 <= n {
            let rad = c(2 * i + 1) * c(2 * i + 2);
            let poly = minus_t_one_plus_t2(c(2 * i) + c(2 * i + 3));
            m.set(i as usize, col, RadicalEntry::radical(poly, rad));
        }
        if i + 2 <= n {
            let rad = c(2 * i + 1) * c(2 * i + 2) * c(2 * i + 3) * c(2 * i + 4);
            m.set((i + 1) as usize, col, RadicalEntry::radical(t2.clone(), rad));
        }
    }
    m
}

/// Radicand of the coefficient that would couple column `i` to the
/// out-of-range row `j` (`j` in `{-1, 0, k+1, k+2}` relative to column
/// `i` at a chain end).  Always zero thanks to the boundary zeros of the
/// band coefficients; exposed so tests can assert exactly that.
pub fn chain_escape_radicand(k: u32, i: i64, j: i64) -> i64 {
    let c = |l| band_coeff(k, l);
    match j - i {
        -2 => c(2 * i - 3) * c(2 * i - 2) * c(2 * i - 1) * c(2 * i),
        -1 => c(2 * i - 1) * c(2 * i),
        1 => c(2 * i + 1) * c(2 * i + 2),
        2 => c(2 * i + 1) * c(2 * i + 2) * c(2 * i + 3) * c(2 * i + 4),
        _ => panic!("escape offset must be within the band"),
    }
}

/// Balanced face: the diagonal rescaling `delta_1 = 1`,
/// `delta_{i+1} = delta_i sqrt(c(2i+1)c(2i+2))` turns every entry into an
/// integer polynomial while preserving the spectrum and all leading
/// principal minors:
///
/// ```text
/// B[i-2,i] =  t^2 c(2i-3)c(2i-2)c(2i-1)c(2i)
/// B[i-1,i] = -t(1+t^2)(c(2i-2)+c(2i+1)) c(2i-1)c(2i)
/// B[i,  i] =  same diagonal as the symmetric face
/// B[i+1,i] = -t(1+t^2)(c(2i)+c(2i+3))
/// B[i+2,i] =  t^2
/// ```
pub fn build_balanced(k: u32) -> PolyMatrix {
    assert!(k >= 1);
    let mut m = PolyMatrix::zero(k as usize);
    let n = k as i64;
    let c = |l| band_coeff(k, l);
    let t2 = Poly::from_coeffs(&[0, 0, 1]);
    for i in 1..=n {
        let col = (i - 1) as usize;
        if i - 2 >= 1 {
            let f = c(2 * i - 3) * c(2 * i - 2) * c(2 * i - 1) * c(2 * i);
            m.set((i - 3) as usize, col, t2.scale(&rat_int(f)));
        }
        if i - 1 >= 1 {
            let f = c(2 * i - 1) * c(2 * i);
            let poly = minus_t_one_plus_t2((c(2 * i - 2) + c(2 * i + 1)) * f);
            m.set((i - 2) as usize, col, poly);
        }
        m.set(col, col, diagonal_poly(k, i));
        if i + 1 <= n {
            m.set(i as usize, col, minus_t_one_plus_t2(c(2 * i) + c(2 * i + 3)));
        }
        if i + 2 <= n {
            m.set((i + 1) as usize, col, t2.clone());
        }
    }
    m
}

/// Closed form of the `l`-th leading principal minor of the block:
///
/// ```text
/// eta_{k,l}(t) = t^{2l} c(3) c(2l+3) prod_{i=1}^{l-1} c(2i+3)^2
/// ```
///
/// Positive for `t != 0` while `l < k`, negative at `l = k` (the factor
/// `c(2k+3)` is the only negative one), which pins the block's inertia at
/// exactly one negative eigenvalue.
pub fn eta_closed_form(k: u32, l: u32) -> Result<Poly, Error> {
    if l < 1 || l > k {
        return Err(Error::MinorOutOfRange { k, l });
    }
    let c = |x| band_coeff(k, x);
    let mut factor = rat_int(c(3)) * rat_int(c(2 * i64::from(l) + 3));
    for i in 1..i64::from(l) {
        let ci = rat_int(c(2 * i + 3));
        factor *= &ci * &ci;
    }
    Ok(Poly::monomial(factor, 2 * l as usize))
}

/// `det(B_k(t) + shift(t) I)` on the balanced face, exact.
pub fn det_shifted(k: u32, shift: &Poly) -> Poly {
    build_balanced(k).add_shift(shift).det()
}
