//! Sturm chains: exact real-root counting and isolation over Q.
//!
//! Counts use half-open intervals `(a, b]` and squarefree reduction, so a
//! multiple root is counted once.  Multiplicity, when wanted, comes from
//! the gcd chain (`gcd(p, p')` holds the roots of `p` of multiplicity at
//! least two, each dropped by one).  Chain elements are rescaled to
//! primitive integer form; positive scaling leaves every sign pattern
//! intact.

use crate::poly::Poly;
use crate::rational::{rat, rat_sign, Rational};
use num_traits::{Signed, Zero};
use std::cmp::Ordering;

/// Interval endpoint for root counting.
#[derive(Clone, Debug, PartialEq)]
pub enum Endpoint {
    NegInf,
    Value(Rational),
    PosInf,
}

impl Endpoint {
    fn partial_cmp_endpoints(a: &Endpoint, b: &Endpoint) -> Ordering {
        use Endpoint::*;
        match (a, b) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (PosInf, _) | (_, NegInf) => Ordering::Greater,
            (Value(x), Value(y)) => x.cmp(y),
        }
    }
}

/// Canonical Sturm chain of a squarefree polynomial.
pub struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    /// Builds the chain `p, p', -rem(...), ...` for squarefree `p`.
    pub fn new(p: &Poly) -> Self {
        assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
        let mut chain = vec![p.primitive()];
        if p.degree() >= Some(1) {
            chain.push(p.derivative().primitive());
            loop {
                let k = chain.len();
                let r = chain[k - 2].div_rem(&chain[k - 1]).1;
                if r.is_zero() {
                    break;
                }
                chain.push((-r).primitive());
                if chain.last().unwrap().degree() == Some(0) {
                    break;
                }
            }
        }
        SturmChain { chain }
    }

    /// Sign variations of the chain at an endpoint, zeros skipped.
    pub fn variations(&self, at: &Endpoint) -> usize {
        let signs = self.chain.iter().map(|p| match at {
            Endpoint::NegInf => p.sign_at_neg_inf(),
            Endpoint::PosInf => p.sign_at_pos_inf(),
            Endpoint::Value(x) => rat_sign(&p.eval(x)),
        });
        let mut count = 0;
        let mut last = 0i8;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.  `p` must be
/// nonzero; any multiple root counts once.
pub fn sturm_count(p: &Poly, lo: &Endpoint, hi: &Endpoint) -> usize {
    assert!(!p.is_zero(), "root count of the zero polynomial");
    if Endpoint::partial_cmp_endpoints(lo, hi) != Ordering::Less {
        return 0;
    }
    let mut sf = p.squarefree_part();
    if sf.degree() == Some(0) {
        return 0;
    }
    // Roots at the endpoints break the classical statement: deflate them
    // (squarefree, so each divides out once), crediting hi's root to the
    // half-open interval.
    let mut bonus = 0;
    if let Endpoint::Value(b) = hi {
        if sf.eval(b).is_zero() {
            bonus = 1;
            sf = sf
                .div_exact(&Poly::new(vec![-b.clone(), Rational::from_integer(1.into())]))
                .expect("root must divide");
        }
    }
    if let Endpoint::Value(a) = lo {
        if sf.eval(a).is_zero() {
            sf = sf
                .div_exact(&Poly::new(vec![-a.clone(), Rational::from_integer(1.into())]))
                .expect("root must divide");
        }
    }
    if sf.degree() == Some(0) {
        return bonus;
    }
    let chain = SturmChain::new(&sf);
    chain.variations(lo) - chain.variations(hi) + bonus
}

/// Number of real roots in `(lo, hi]` counted with multiplicity, via the
/// gcd chain.
pub fn sturm_count_with_multiplicity(p: &Poly, lo: &Endpoint, hi: &Endpoint) -> usize {
    assert!(!p.is_zero());
    let mut total = 0;
    let mut layer = p.clone();
    while layer.degree() >= Some(1) {
        total += sturm_count(&layer, lo, hi);
        layer = Poly::gcd(&layer, &layer.derivative());
    }
    total
}

/// A bound `B` with every real root of `p` in `(-B, B]` (Cauchy).
fn root_bound(p: &Poly) -> Rational {
    let lead = p.leading().expect("nonzero").abs();
    let mut max = Rational::zero();
    for c in p.coeffs() {
        let r = c.abs() / lead.clone();
        if r > max {
            max = r;
        }
    }
    max + rat(2, 1)
}

/// Isolates the distinct real roots of `p`: disjoint brackets `(lo, hi]`
/// in ascending order, one root each, refined to `hi - lo <= width`.
pub fn isolate_real_roots(p: &Poly, width: &Rational) -> Vec<(Rational, Rational)> {
    assert!(!p.is_zero());
    assert!(width > &Rational::zero());
    let sf = p.squarefree_part();
    if sf.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let chain = SturmChain::new(&sf);
    let b = root_bound(&sf);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.variations(&Endpoint::Value(lo.clone()))
            - chain.variations(&Endpoint::Value(hi.clone()));
        match n {
            0 => {}
            1 => {
                let (mut lo, mut hi) = (lo, hi);
                while &hi - &lo > *width {
                    let mid = (&lo + &hi) / rat(2, 1);
                    let left = chain.variations(&Endpoint::Value(lo.clone()))
                        - chain.variations(&Endpoint::Value(mid.clone()));
                    if left == 1 {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                out.push((lo, hi));
            }
            _ => {
                let mid = (&lo + &hi) / rat(2, 1);
                // Push left last so brackets come out ascending.
                stack.push((mid.clone(), hi));
                stack.push((lo, mid));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}
