//! Real-root counting, isolation, refinement, and positivity certificates.
//!
//! Counting uses Sturm sequences built on the squarefree part, so multiple
//! roots are handled exactly. The interval convention throughout is
//! half-open `(lo, hi]`, with infinite endpoints decided by leading-sign
//! limits. Isolation splits `(0, +inf)` by Sturm-count bisection; every
//! rational root is discovered exactly and reported as a degenerate interval.

use crate::poly::{AlgebraError, UniPoly};
use crate::ratio::{rat_int, simplest_in_open, to_pq};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Interval endpoint for root counting.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Bound {
    fn strictly_below(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, Bound::PosInf) => false,
            (Bound::NegInf, _) | (_, Bound::PosInf) => true,
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => false,
        }
    }
}

/// An interval with rational endpoints isolating one distinct real root.
///
/// `lo == hi` marks an exact rational root; otherwise the interval contains
/// exactly one distinct root of the referenced polynomial in its interior.
/// `multiplicity` is that root's multiplicity in the referenced polynomial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IsolatingInterval {
    #[serde(with = "crate::ratio::rat_pq")]
    pub lo: BigRational,
    #[serde(with = "crate::ratio::rat_pq")]
    pub hi: BigRational,
    pub multiplicity: u32,
}

impl IsolatingInterval {
    pub fn exact(r: BigRational, multiplicity: u32) -> Self {
        IsolatingInterval {
            lo: r.clone(),
            hi: r,
            multiplicity,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / rat_int(2)
    }

    /// True when `x` lies in the closed interval.
    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }
}

/// Sturm sequence of a polynomial (callers pass the squarefree part).
pub(crate) struct SturmChain {
    seq: Vec<UniPoly>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Self {
        let mut seq = vec![p.clone()];
        if p.degree().unwrap_or(0) >= 1 {
            seq.push(p.derivative());
            loop {
                let n = seq.len();
                let r = seq[n - 2].divrem(&seq[n - 1]).expect("nonzero divisor").1;
                if r.is_zero() {
                    break;
                }
                // Monic negation keeps signs right and coefficients small.
                let lead = r.leading().expect("nonzero").clone();
                let scale = if lead.is_negative() {
                    lead.recip()
                } else {
                    -lead.recip()
                };
                seq.push(r.scaled(&scale));
            }
        }
        SturmChain { seq }
    }

    /// Sign variations at a point, zeros dropped. With that convention
    /// `variations(a) - variations(b)` counts distinct roots in `(a, b]`.
    fn variations_at(&self, x: &Bound) -> usize {
        let signs: Vec<i32> = self
            .seq
            .iter()
            .map(|p| match x {
                Bound::Finite(v) => p.sign_at(v),
                Bound::PosInf => p.leading().map_or(0, |c| if c.is_negative() { -1 } else { 1 }),
                Bound::NegInf => p.leading().map_or(0, |c| {
                    let s = if c.is_negative() { -1 } else { 1 };
                    if p.degree().unwrap_or(0) % 2 == 1 {
                        -s
                    } else {
                        s
                    }
                }),
            })
            .filter(|&s| s != 0)
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        let a = self.variations_at(lo);
        let b = self.variations_at(hi);
        a.saturating_sub(b)
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &UniPoly, lo: &Bound, hi: &Bound) -> Result<usize, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if !lo.strictly_below(hi) {
        return Err(AlgebraError::NotIsolating("need lo < hi".into()));
    }
    let chain = SturmChain::new(&p.squarefree_part());
    Ok(chain.count(lo, hi))
}

/// Descartes' rule of signs: sign variations of the coefficient sequence,
/// an upper bound (of matching parity) for positive roots with multiplicity.
pub fn descartes_positive_bound(p: &UniPoly) -> Result<usize, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let signs: Vec<i32> = p
        .coeffs()
        .iter()
        .map(|c| {
            if c.is_zero() {
                0
            } else if c.is_negative() {
                -1
            } else {
                1
            }
        })
        .filter(|&s| s != 0)
        .collect();
    Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
}

/// Cauchy bound: every real root has absolute value strictly below this.
fn cauchy_bound(p: &UniPoly) -> BigRational {
    let lead = p.leading().expect("nonzero").abs();
    let mut max = BigRational::zero();
    let n = p.coeffs().len() - 1;
    for c in &p.coeffs()[..n] {
        let v = c.abs() / &lead;
        if v > max {
            max = v;
        }
    }
    (max + BigRational::one()).ceil()
}

/// Isolate the distinct roots of `p` in `(0, +inf)`.
///
/// Returns pairwise-disjoint intervals sorted ascending, each carrying the
/// root's multiplicity in `p`. Exact rational roots come back degenerate.
pub fn isolate_positive_roots(p: &UniPoly) -> Result<Vec<IsolatingInterval>, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let mut found: Vec<(RootLoc, u32)> = Vec::new();
    for (mult, factor) in p.squarefree_decomposition()? {
        for loc in isolate_squarefree_positive(&factor) {
            found.push((loc, mult));
        }
    }
    disjointify(&mut found);
    found.sort_by_key(|a| a.0.sort_key());
    Ok(found
        .into_iter()
        .map(|(loc, mult)| match loc {
            RootLoc::Exact(r) => IsolatingInterval::exact(r, mult),
            RootLoc::Bracket { lo, hi, .. } => IsolatingInterval {
                lo,
                hi,
                multiplicity: mult,
            },
        })
        .collect())
}

/// Location of a single simple root of a squarefree factor.
#[derive(Clone, Debug)]
enum RootLoc {
    Exact(BigRational),
    /// Open interval with a sign change of `factor` across it.
    Bracket {
        lo: BigRational,
        hi: BigRational,
        factor: UniPoly,
    },
}

impl RootLoc {
    fn sort_key(&self) -> (BigRational, BigRational) {
        match self {
            RootLoc::Exact(r) => (r.clone(), r.clone()),
            RootLoc::Bracket { lo, hi, .. } => (lo.clone(), hi.clone()),
        }
    }

    /// Halve a bracket, keeping the sign change. Turns into `Exact` when the
    /// midpoint lands on the root.
    fn shrink(&mut self) {
        if let RootLoc::Bracket { lo, hi, factor } = self {
            let mid = (&*lo + &*hi) / rat_int(2);
            match factor.sign_at(&mid) {
                0 => *self = RootLoc::Exact(mid),
                s => {
                    if s == factor.sign_at(lo) {
                        *lo = mid;
                    } else {
                        *hi = mid;
                    }
                }
            }
        }
    }

    fn overlaps(&self, other: &RootLoc) -> bool {
        let (a_lo, a_hi) = self.sort_key();
        let (b_lo, b_hi) = other.sort_key();
        // Strict separation is required so that interval endpoints stay
        // usable as root-free probe points downstream.
        !(a_hi < b_lo || b_hi < a_lo)
    }

    fn width(&self) -> BigRational {
        let (lo, hi) = self.sort_key();
        hi - lo
    }
}

/// Shrink brackets from distinct squarefree factors until pairwise disjoint.
fn disjointify(found: &mut [(RootLoc, u32)]) {
    loop {
        let mut overlapped = None;
        'outer: for i in 0..found.len() {
            for j in (i + 1)..found.len() {
                if found[i].0.overlaps(&found[j].0) {
                    overlapped = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = overlapped else { return };
        // Halve the wider bracket; roots are distinct so this terminates.
        let (a, b) = (found[i].0.width(), found[j].0.width());
        if a >= b {
            found[i].0.shrink();
        } else {
            found[j].0.shrink();
        }
    }
}

/// Distinct positive roots of a squarefree polynomial.
fn isolate_squarefree_positive(f: &UniPoly) -> Vec<RootLoc> {
    // Drop the root at zero if present (squarefree: at most a single x factor).
    let f = if f.coeff(0).is_zero() && !f.is_zero() {
        f.divrem(&UniPoly::var()).expect("x divides").0
    } else {
        f.clone()
    };
    let deg = f.degree().unwrap_or(0);
    if deg == 0 {
        return vec![];
    }
    if deg == 1 {
        let root = -f.coeff(0) / f.coeff(1);
        return if root.is_positive() {
            vec![RootLoc::Exact(root)]
        } else {
            vec![]
        };
    }
    let mut bound = cauchy_bound(&f);
    while f.sign_at(&bound) == 0 {
        bound += BigRational::one();
    }
    let chain = SturmChain::new(&f);
    let zero = BigRational::zero();
    let v_lo = chain.variations_at(&Bound::Finite(zero.clone()));
    let v_hi = chain.variations_at(&Bound::Finite(bound.clone()));
    let mut out = Vec::new();
    split(&f, &chain, &zero, v_lo, &bound, v_hi, false, &mut out);
    out
}

/// Recursively isolate the roots of squarefree `f` in `(lo, hi]`.
/// `hi_reported` marks that an exact root at `hi` was already emitted.
#[allow(clippy::too_many_arguments)]
fn split(
    f: &UniPoly,
    chain: &SturmChain,
    lo: &BigRational,
    v_lo: usize,
    hi: &BigRational,
    v_hi: usize,
    hi_reported: bool,
    out: &mut Vec<RootLoc>,
) {
    let mut n = v_lo.saturating_sub(v_hi);
    let mut hi_is_root = hi_reported;
    if !hi_is_root && f.sign_at(hi) == 0 {
        out.push(RootLoc::Exact(hi.clone()));
        hi_is_root = true;
    }
    if hi_is_root {
        n = n.saturating_sub(1);
    }
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(locate_single_root(f, chain, lo.clone(), hi.clone()));
        return;
    }
    let mid = (lo + hi) / rat_int(2);
    let v_mid = chain.variations_at(&Bound::Finite(mid.clone()));
    split(f, chain, lo, v_lo, &mid, v_mid, false, out);
    split(f, chain, &mid, v_mid, hi, v_hi, hi_is_root, out);
}

/// Pin down the single interior root of `f` in `(lo, hi)`: either identify it
/// as an exact rational or return a sign-change bracket around it.
fn locate_single_root(
    f: &UniPoly,
    chain: &SturmChain,
    mut lo: BigRational,
    mut hi: BigRational,
) -> RootLoc {
    // First shrink until both endpoint signs are nonzero (an endpoint can be
    // a different, already-reported root of f).
    while f.sign_at(&lo) == 0 || f.sign_at(&hi) == 0 {
        let mid = (&lo + &hi) / rat_int(2);
        match f.sign_at(&mid) {
            0 => return RootLoc::Exact(mid),
            _ => {
                let in_left = chain.count(
                    &Bound::Finite(lo.clone()),
                    &Bound::Finite(mid.clone()),
                ) >= 1;
                if in_left {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
        }
    }
    debug_assert!(f.sign_at(&lo) * f.sign_at(&hi) < 0);
    // A rational root p/q in lowest terms has q dividing the integer leading
    // coefficient L, and two rationals with denominators <= L differ by at
    // least 1/L^2. Narrow below that and test the simplest candidate.
    let ints = f.primitive_int_coeffs();
    let lead = ints.last().expect("nonzero").abs();
    let gap = BigRational::new(BigInt::one(), BigInt::from(2) * &lead * &lead);
    let s_lo = f.sign_at(&lo);
    while &hi - &lo >= gap {
        let mid = (&lo + &hi) / rat_int(2);
        match f.sign_at(&mid) {
            0 => return RootLoc::Exact(mid),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    let candidate = simplest_in_open(&lo, &hi);
    if f.sign_at(&candidate) == 0 {
        return RootLoc::Exact(candidate);
    }
    RootLoc::Bracket {
        lo,
        hi,
        factor: f.clone(),
    }
}

/// Bisection refinement of an isolated root down to `tol`, returning the
/// midpoint of the final bracket (or the exact root when one is hit).
pub fn refine_root(
    p: &UniPoly,
    iv: &IsolatingInterval,
    tol: &BigRational,
) -> Result<BigRational, AlgebraError> {
    if p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if !tol.is_positive() {
        return Err(AlgebraError::NotIsolating("tolerance must be positive".into()));
    }
    if iv.is_exact() {
        if p.sign_at(&iv.lo) != 0 {
            return Err(AlgebraError::NotIsolating(format!(
                "point {} is not a root",
                to_pq(&iv.lo)
            )));
        }
        return Ok(iv.lo.clone());
    }
    let sf = p.squarefree_part();
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let s_lo = sf.sign_at(&lo);
    let s_hi = sf.sign_at(&hi);
    if s_lo * s_hi >= 0 {
        return Err(AlgebraError::NotIsolating(format!(
            "no sign change of the squarefree part on [{}, {}]",
            to_pq(&lo),
            to_pq(&hi)
        )));
    }
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / rat_int(2);
        match sf.sign_at(&mid) {
            0 => return Ok(mid),
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Ok((&lo + &hi) / rat_int(2))
}

/// Exact sign of `q` at the algebraic root of `p` isolated by `iv`.
///
/// Refines the interval until it is free of roots of `q`, so the result is
/// certified. Errors when `q` itself vanishes at the root.
pub fn sign_at_isolated_root(
    q: &UniPoly,
    p: &UniPoly,
    iv: &IsolatingInterval,
) -> Result<i32, AlgebraError> {
    if q.is_zero() || p.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if iv.is_exact() {
        return match q.sign_at(&iv.lo) {
            0 => Err(AlgebraError::NotIsolating(
                "q vanishes at the isolated root".into(),
            )),
            s => Ok(s),
        };
    }
    let sf = p.squarefree_part();
    let qf = q.squarefree_part();
    // A shared root inside the interval would make the sign ill-defined.
    let shared = UniPoly::gcd(&sf, &qf);
    let lo_b = Bound::Finite(iv.lo.clone());
    let hi_b = Bound::Finite(iv.hi.clone());
    if shared.degree().unwrap_or(0) >= 1 {
        let chain = SturmChain::new(&shared);
        if chain.count(&lo_b, &hi_b) >= 1 {
            return Err(AlgebraError::NotIsolating(
                "q vanishes at the isolated root".into(),
            ));
        }
    }
    let q_chain = SturmChain::new(&qf);
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let s_lo = sf.sign_at(&lo);
    if s_lo * sf.sign_at(&hi) >= 0 {
        return Err(AlgebraError::NotIsolating(
            "interval does not bracket a sign change".into(),
        ));
    }
    loop {
        let q_lo = q.sign_at(&lo);
        let q_hi = q.sign_at(&hi);
        if q_lo != 0
            && q_lo == q_hi
            && q_chain.count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone())) == 0
        {
            return Ok(q_lo);
        }
        let mid = (&lo + &hi) / rat_int(2);
        match sf.sign_at(&mid) {
            0 => {
                return match q.sign_at(&mid) {
                    0 => Err(AlgebraError::NotIsolating(
                        "q vanishes at the isolated root".into(),
                    )),
                    s => Ok(s),
                }
            }
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
}

/// Exact decision of `p(x) > 0` for all `x` strictly inside `(lo, hi)`.
/// Endpoint zeros are permitted; the zero polynomial yields `false`.
pub fn positive_on_open_interval(p: &UniPoly, lo: &BigRational, hi: &BigRational) -> bool {
    if p.is_zero() || lo >= hi {
        return false;
    }
    let sf = p.squarefree_part();
    let chain = SturmChain::new(&sf);
    let mut interior = chain.count(
        &Bound::Finite(lo.clone()),
        &Bound::Finite(hi.clone()),
    );
    if sf.sign_at(hi) == 0 {
        interior = interior.saturating_sub(1);
    }
    if interior > 0 {
        return false;
    }
    p.sign_at(&((lo + hi) / rat_int(2))) > 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;
    use proptest::prelude::*;

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_int_coeffs(coeffs)
    }

    /// f_CSC of the triple-csc golden configuration.
    fn golden_quintic() -> UniPoly {
        poly(&[-48, 88, 720, -1242, -459, 243])
    }

    #[test]
    fn sturm_counts_golden_quintic() {
        let c = sturm_count(&golden_quintic(), &Bound::Finite(rat_int(0)), &Bound::PosInf).unwrap();
        assert_eq!(c, 3);
    }

    #[test]
    fn sturm_counts_no_real_roots() {
        let c = sturm_count(&poly(&[1, 0, 1]), &Bound::NegInf, &Bound::PosInf).unwrap();
        assert_eq!(c, 0);
    }

    #[test]
    fn sturm_counts_quadratic_with_two_positive_roots() {
        // 3b^2 - 202b + 2: positive discriminant, positive sum and product.
        let c = sturm_count(&poly(&[2, -202, 3]), &Bound::Finite(rat_int(0)), &Bound::PosInf)
            .unwrap();
        assert_eq!(c, 2);
    }

    #[test]
    fn sturm_convention_is_half_open() {
        // Root at the right endpoint counts; at the left endpoint it does not.
        let p = poly(&[0, 1]); // x
        assert_eq!(
            sturm_count(&p, &Bound::Finite(rat_int(-1)), &Bound::Finite(rat_int(0))).unwrap(),
            1
        );
        assert_eq!(
            sturm_count(&p, &Bound::Finite(rat_int(0)), &Bound::Finite(rat_int(1))).unwrap(),
            0
        );
    }

    #[test]
    fn descartes_bounds() {
        assert_eq!(descartes_positive_bound(&golden_quintic()).unwrap(), 3);
        assert_eq!(descartes_positive_bound(&poly(&[1, 2, 3])).unwrap(), 0);
        assert_eq!(descartes_positive_bound(&poly(&[2, -2, 3])).unwrap(), 2);
    }

    #[test]
    fn isolates_sqrt_two() {
        let ivs = isolate_positive_roots(&poly(&[-2, 0, 1])).unwrap();
        assert_eq!(ivs.len(), 1);
        assert_eq!(ivs[0].multiplicity, 1);
        let sqrt2_lo = rat(141421, 100000);
        let sqrt2_hi = rat(141422, 100000);
        assert!(ivs[0].lo < sqrt2_hi && ivs[0].hi > sqrt2_lo);
    }

    #[test]
    fn isolates_golden_quintic_roots() {
        let ivs = isolate_positive_roots(&golden_quintic()).unwrap();
        assert_eq!(ivs.len(), 3);
        for w in ivs.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
    }

    #[test]
    fn isolates_exact_double_root() {
        // (3b - 2)^2 -> degenerate interval [2/3, 2/3] with multiplicity 2.
        let p = &poly(&[-2, 3]) * &poly(&[-2, 3]);
        let ivs = isolate_positive_roots(&p).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].is_exact());
        assert_eq!(ivs[0].lo, rat(2, 3));
        assert_eq!(ivs[0].multiplicity, 2);
    }

    #[test]
    fn discovers_rational_root_inside_irrational_cluster() {
        // (3b - 2)(b^2 - 3): rational 2/3 next to sqrt(3).
        let p = &poly(&[-2, 3]) * &poly(&[-3, 0, 1]);
        let ivs = isolate_positive_roots(&p).unwrap();
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].is_exact());
        assert_eq!(ivs[0].lo, rat(2, 3));
        assert!(!ivs[1].is_exact());
    }

    #[test]
    fn refine_converges_to_sqrt_two() {
        let p = poly(&[-2, 0, 1]);
        let ivs = isolate_positive_roots(&p).unwrap();
        let tol = BigRational::new(1.into(), 100_000_000.into());
        let x = refine_root(&p, &ivs[0], &tol).unwrap();
        // |x - sqrt(2)| <= 1e-8 means |x^2 - 2| <= (x + sqrt 2) * 1e-8 < 3e-8.
        let err = (&x * &x - rat_int(2)).abs();
        assert!(err < BigRational::new(3.into(), 100_000_000.into()));
    }

    #[test]
    fn refine_rejects_non_isolating() {
        let p = poly(&[-2, 0, 1]);
        let iv = IsolatingInterval {
            lo: rat_int(2),
            hi: rat_int(3),
            multiplicity: 1,
        };
        assert!(matches!(
            refine_root(&p, &iv, &rat(1, 1000)),
            Err(AlgebraError::NotIsolating(_))
        ));
    }

    #[test]
    fn positivity_certificates() {
        // Negative discriminant and positive at 0.
        assert!(positive_on_open_interval(
            &poly(&[2064, 1760, 400]),
            &rat_int(-1),
            &rat_int(1)
        ));
        // Endpoint-only zeros are allowed.
        assert!(positive_on_open_interval(&poly(&[1, 0, -1]), &rat_int(-1), &rat_int(1)));
        // Interior zero fails strict positivity.
        assert!(!positive_on_open_interval(&poly(&[0, 0, 1]), &rat_int(-1), &rat_int(1)));
        // Zero polynomial is never positive.
        assert!(!positive_on_open_interval(&UniPoly::zero(), &rat_int(-1), &rat_int(1)));
    }

    fn weighted_positive_count(p: &UniPoly) -> u64 {
        // Oracle: multiplicity-weighted positive-root count from the
        // squarefree decomposition, each factor counted by Sturm.
        p.squarefree_decomposition()
            .unwrap()
            .iter()
            .map(|(m, f)| {
                *m as u64
                    * sturm_count(f, &Bound::Finite(rat_int(0)), &Bound::PosInf).unwrap() as u64
            })
            .sum()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn sturm_within_descartes(coeffs in proptest::collection::vec(-100i64..=100, 1..=9)) {
            let p = UniPoly::from_int_coeffs(&coeffs);
            prop_assume!(!p.is_zero());
            let count = sturm_count(&p, &Bound::Finite(rat_int(0)), &Bound::PosInf).unwrap();
            let bound = descartes_positive_bound(&p).unwrap();
            prop_assert!(count <= bound);
            // Parity matches when all positive roots are simple.
            let g = UniPoly::gcd(&p, &p.derivative());
            if g.degree() == Some(0) {
                prop_assert_eq!(count % 2, bound % 2);
            }
        }

        #[test]
        fn isolation_accounts_for_all_positive_roots(
            coeffs in proptest::collection::vec(-50i64..=50, 2..=9),
            square in proptest::collection::vec(-5i64..=5, 2..=3),
        ) {
            // Mix in a squared factor so multiplicities actually occur.
            let base = UniPoly::from_int_coeffs(&coeffs);
            let sq = UniPoly::from_int_coeffs(&square);
            prop_assume!(!base.is_zero() && sq.degree().unwrap_or(0) >= 1);
            let p = &base * &(&sq * &sq);
            let ivs = isolate_positive_roots(&p).unwrap();
            let total: u64 = ivs.iter().map(|iv| iv.multiplicity as u64).sum();
            prop_assert_eq!(total, weighted_positive_count(&p));
            for w in ivs.windows(2) {
                prop_assert!(w[0].hi <= w[1].lo);
                prop_assert!(w[0].lo <= w[0].hi);
            }
            for iv in &ivs {
                if iv.is_exact() {
                    prop_assert_eq!(p.sign_at(&iv.lo), 0);
                } else {
                    // The interior really holds exactly one distinct root.
                    let sf = p.squarefree_part();
                    prop_assert_eq!(
                        sturm_count(&sf, &Bound::Finite(iv.lo.clone()),
                                    &Bound::Finite(iv.hi.clone())).unwrap(),
                        1
                    );
                }
            }
        }

        #[test]
        fn refinement_stays_inside_and_contracts(
            coeffs in proptest::collection::vec(-30i64..=30, 3..=7),
        ) {
            let p = UniPoly::from_int_coeffs(&coeffs);
            prop_assume!(!p.is_zero());
            let ivs = isolate_positive_roots(&p).unwrap();
            prop_assume!(!ivs.is_empty());
            let iv = &ivs[0];
            let tol = rat(1, 1 << 20);
            let x1 = refine_root(&p, iv, &tol).unwrap();
            prop_assert!(iv.lo <= x1 && x1 <= iv.hi);
            let half = &tol / rat_int(2);
            let x2 = refine_root(&p, iv, &half).unwrap();
            prop_assert!((x1 - x2).abs() <= tol);
        }

        #[test]
        fn positivity_agrees_with_dense_sampling(
            coeffs in proptest::collection::vec(-40i64..=40, 1..=7),
        ) {
            let p = UniPoly::from_int_coeffs(&coeffs);
            prop_assume!(!p.is_zero());
            let lo = rat_int(-1);
            let hi = rat_int(1);
            let verdict = positive_on_open_interval(&p, &lo, &hi);
            let n = 1000;
            let all_positive = (1..n).all(|i| {
                let x = &lo + (&hi - &lo) * rat(i, n);
                p.sign_at(&x) > 0
            });
            if verdict {
                prop_assert!(all_positive);
            } else if all_positive {
                // Sampling can only miss a sign-free interior zero; verify
                // such a zero really exists.
                let sf = p.squarefree_part();
                let mut interior = sturm_count(&sf, &Bound::Finite(lo.clone()),
                                               &Bound::Finite(hi.clone())).unwrap();
                if sf.sign_at(&hi) == 0 {
                    interior -= 1;
                }
                prop_assert!(interior > 0);
            }
        }
    }
}
