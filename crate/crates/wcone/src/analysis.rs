//! Per-manifold analysis: critical rays of `H` with classification, cscS
//! rays, null-scalar rays, K-stability verdicts, boundary behavior, and
//! parameter sweeps.
//!
//! The critical set of `H` on the w-cone is the union of the zeros of the
//! Sasaki-Futaki value (`f_CSC`) and of the total transverse scalar
//! curvature (`S_num`): these are exactly the positive roots of the
//! `H'`-numerator `S_num^(d_N+1) f_CSC`. Classification works with exact
//! signs of `H'` at rational probes flanking each isolating interval.

use crate::extremal::{admissibility_boundary, extremal_solution, ExtremalError};
use crate::functionals::{FunctionalBundle, FunctionalError};
use crate::join::{violations, JoinParams, JoinParamsRaw, RayId};
use crate::poly::{AlgebraError, UniPoly};
use crate::ratio::{decimal_sig, rat, to_pq};
use crate::roots::{isolate_positive_roots, refine_root, sturm_count, Bound, IsolatingInterval};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default refinement tolerance for decimal renderings: 10^-12.
pub fn default_tolerance() -> BigRational {
    rat(1, 1_000_000_000_000)
}

/// Significant digits used for report decimals.
const REPORT_DIGITS: usize = 15;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("boundary behavior assertion failed: {0}")]
    BoundaryAssertion(String),
    #[error("b must be positive")]
    NonPositiveB,
    #[error(transparent)]
    Functional(#[from] FunctionalError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
    #[error(transparent)]
    Join(#[from] crate::join::JoinError),
}

/// Which factor of the `H'`-numerator vanishes at a critical ray.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CriticalSource {
    #[serde(rename = "futaki-zero")]
    FutakiZero,
    #[serde(rename = "null-scalar")]
    NullScalar,
    #[serde(rename = "both")]
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    #[serde(rename = "local-min")]
    LocalMin,
    #[serde(rename = "local-max")]
    LocalMax,
    #[serde(rename = "inflection")]
    Inflection,
    #[serde(rename = "degenerate")]
    Degenerate,
}

/// A classified critical ray of the Einstein-Hilbert functional.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriticalPoint {
    pub interval: IsolatingInterval,
    #[serde(with = "crate::ratio::rat_pq")]
    pub approx: BigRational,
    pub approx_decimal: String,
    pub source: CriticalSource,
    pub classification: Classification,
    pub multiplicity_in_dh: u32,
}

/// An isolated root paired with its refined decimal rendering.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootRecord {
    pub interval: IsolatingInterval,
    #[serde(with = "crate::ratio::rat_pq")]
    pub approx: BigRational,
    pub approx_decimal: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictKind {
    #[serde(rename = "K-semistable-cscS")]
    KSemistableCscS,
    #[serde(rename = "K-unstable")]
    KUnstable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnstableReason {
    #[serde(rename = "non-critical")]
    NonCritical,
    #[serde(rename = "critical-null-scalar-nonzero-Futaki")]
    CriticalNullScalarNonzeroFutaki,
}

/// K-stability verdict for the ray at a rational `b`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityVerdict {
    #[serde(with = "crate::ratio::rat_pq")]
    pub b: BigRational,
    pub verdict: VerdictKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<UnstableReason>,
    /// `b` lies inside the isolating interval of an irrational csc root.
    pub near_csc: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

/// Confirmed boundary behavior of the reduced `H`: pole of order `d_N + 1`
/// at `b = 0` and growth of degree `d_N + 1` at infinity, both with positive
/// leading coefficients, so `H -> +inf` at both ends of the cone.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryBehavior {
    pub pole_order_at_zero: u32,
    #[serde(with = "crate::ratio::rat_pq")]
    pub lead_at_zero: BigRational,
    pub growth_degree_at_infinity: u32,
    #[serde(with = "crate::ratio::rat_pq")]
    pub lead_at_infinity: BigRational,
}

fn root_record(
    poly: &UniPoly,
    interval: IsolatingInterval,
    tol: &BigRational,
) -> Result<RootRecord, AnalysisError> {
    let approx = refine_root(poly, &interval, tol)?;
    Ok(RootRecord {
        approx_decimal: decimal_sig(&approx, REPORT_DIGITS),
        approx,
        interval,
        note: None,
    })
}

/// Positive roots of `f_CSC`: the cscS rays, with multiplicities.
pub fn csc_rays(bundle: &FunctionalBundle) -> Result<Vec<IsolatingInterval>, AnalysisError> {
    Ok(isolate_positive_roots(bundle.f_csc())?)
}

/// Positive roots of `S_num`: the null-scalar rays. Empty whenever `A >= 0`,
/// and never more than two (the interior coefficients share the sign of `A`).
pub fn null_scalar_rays(
    bundle: &FunctionalBundle,
) -> Result<Vec<IsolatingInterval>, AnalysisError> {
    Ok(isolate_positive_roots(bundle.s_num())?)
}

/// All critical rays of `H`, classified. These are exactly the positive
/// roots of `S_num^(d_N+1) f_CSC`, merged when the two factors share a root.
pub fn critical_points(
    bundle: &FunctionalBundle,
    tol: &BigRational,
) -> Result<Vec<CriticalPoint>, AnalysisError> {
    let numerator = bundle.dh_numerator();
    let intervals = isolate_positive_roots(&numerator)?;
    let s_num = bundle.s_num();
    let f_csc = bundle.f_csc();
    let mut out = Vec::with_capacity(intervals.len());
    for (i, iv) in intervals.iter().enumerate() {
        let source = classify_source(s_num, f_csc, iv)?;
        let left = left_probe(&intervals, i);
        let right = right_probe(&intervals, i);
        let sl = numerator.sign_at(&left);
        let sr = numerator.sign_at(&right);
        debug_assert!(sl != 0 && sr != 0);
        let classification = if source == CriticalSource::Both {
            // H and H' vanish together to high order; the sign trichotomy
            // is not meaningful here.
            Classification::Degenerate
        } else {
            match (sl, sr) {
                (-1, 1) => Classification::LocalMin,
                (1, -1) => Classification::LocalMax,
                _ => Classification::Inflection,
            }
        };
        let approx = refine_root(&numerator, iv, tol)?;
        out.push(CriticalPoint {
            interval: iv.clone(),
            approx_decimal: decimal_sig(&approx, REPORT_DIGITS),
            approx,
            source,
            classification,
            multiplicity_in_dh: iv.multiplicity,
        });
    }
    Ok(out)
}

fn classify_source(
    s_num: &UniPoly,
    f_csc: &UniPoly,
    iv: &IsolatingInterval,
) -> Result<CriticalSource, AnalysisError> {
    let (null, futaki) = if iv.is_exact() {
        (
            s_num.sign_at(&iv.lo) == 0,
            f_csc.sign_at(&iv.lo) == 0,
        )
    } else {
        let lo = Bound::Finite(iv.lo.clone());
        let hi = Bound::Finite(iv.hi.clone());
        (
            sturm_count(s_num, &lo, &hi)? >= 1,
            sturm_count(f_csc, &lo, &hi)? >= 1,
        )
    };
    Ok(match (null, futaki) {
        (true, true) => CriticalSource::Both,
        (true, false) => CriticalSource::NullScalar,
        (false, true) => CriticalSource::FutakiZero,
        (false, false) => unreachable!("root of S^k f_csc belongs to a factor"),
    })
}

/// A rational point strictly between the previous root and root `i`,
/// where the `H'`-numerator provably does not vanish.
fn left_probe(intervals: &[IsolatingInterval], i: usize) -> BigRational {
    let iv = &intervals[i];
    if !iv.is_exact() {
        return iv.lo.clone();
    }
    if i == 0 {
        &iv.lo / rat(2, 1)
    } else {
        (&intervals[i - 1].hi + &iv.lo) / rat(2, 1)
    }
}

fn right_probe(intervals: &[IsolatingInterval], i: usize) -> BigRational {
    let iv = &intervals[i];
    if !iv.is_exact() {
        return iv.hi.clone();
    }
    if i + 1 == intervals.len() {
        &iv.hi + rat(1, 1)
    } else {
        (&iv.hi + &intervals[i + 1].lo) / rat(2, 1)
    }
}

/// K-stability of the ray at rational `b > 0`: K-semistable exactly when
/// `f_CSC(b) = 0` (then the ray has a cscS structure, up to isotopy);
/// K-unstable otherwise, with the sub-reason distinguishing non-critical
/// rays from null-scalar critical rays.
pub fn stability_verdict(
    bundle: &FunctionalBundle,
    b: &BigRational,
) -> Result<StabilityVerdict, AnalysisError> {
    if !b.is_positive() {
        return Err(AnalysisError::NonPositiveB);
    }
    let fc = bundle.f_csc().eval(b);
    if fc.is_zero() {
        return Ok(StabilityVerdict {
            b: b.clone(),
            verdict: VerdictKind::KSemistableCscS,
            reason: None,
            near_csc: false,
            note: Some(
                "cscS structure exists up to isotopy; the w-cone Futaki zero extends to the \
                 full Sasaki-Futaki invariant"
                    .to_string(),
            ),
        });
    }
    let s = bundle.s_num().eval(b);
    let reason = if s.is_zero() {
        UnstableReason::CriticalNullScalarNonzeroFutaki
    } else {
        UnstableReason::NonCritical
    };
    let near_csc = csc_rays(bundle)?
        .iter()
        .any(|iv| !iv.is_exact() && &iv.lo < b && b < &iv.hi);
    Ok(StabilityVerdict {
        b: b.clone(),
        verdict: VerdictKind::KUnstable,
        reason: Some(reason),
        near_csc,
        note: near_csc.then(|| {
            "near-csc: b lies inside the isolating interval of an irrational csc ray; \
             the verdict for the ray itself attaches to the interval"
                .to_string()
        }),
    })
}

/// Assert and report the boundary behavior of the reduced `H`.
pub fn boundary_check(bundle: &FunctionalBundle) -> Result<BoundaryBehavior, AnalysisError> {
    let d = bundle.params().d_n() as i64;
    let (v0, lead0) = bundle.h().valuation_at_zero();
    let (di, leadi) = bundle.h().degree_at_infinity();
    if v0 != -(d + 1) || !lead0.is_positive() {
        return Err(AnalysisError::BoundaryAssertion(format!(
            "valuation at 0 is {v0} with lead {}, expected -(d_N+1) = {} with positive lead",
            to_pq(&lead0),
            -(d + 1)
        )));
    }
    if di != d + 1 || !leadi.is_positive() {
        return Err(AnalysisError::BoundaryAssertion(format!(
            "degree at infinity is {di} with lead {}, expected d_N+1 = {} with positive lead",
            to_pq(&leadi),
            d + 1
        )));
    }
    Ok(BoundaryBehavior {
        pole_order_at_zero: (d + 1) as u32,
        lead_at_zero: lead0,
        growth_degree_at_infinity: (d + 1) as u32,
        lead_at_infinity: leadi,
    })
}

/// One row of an `l2` sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub l2: u64,
    pub csc_count: usize,
    pub critical_count: usize,
    pub classifications: Vec<Classification>,
}

/// Sweep `l2` over a range, keeping only values passing the smoothness
/// filter `gcd(l2, w1 w2) = 1` (and coprimality with `l1`). Rows are
/// computed independently, in ascending order.
pub fn scan_l2(
    template: &JoinParams,
    l2_from: u64,
    l2_to: u64,
    tol: &BigRational,
) -> Result<Vec<ScanRow>, AnalysisError> {
    let mut rows = Vec::new();
    for l2 in l2_from..=l2_to {
        if !violations(template.d_n(), template.l1(), l2, template.w1(), template.w2()).is_empty()
        {
            continue;
        }
        let params = template.with_l2(l2)?;
        let bundle = FunctionalBundle::new(params)?;
        let criticals = critical_points(&bundle, tol)?;
        let csc = csc_rays(&bundle)?;
        rows.push(ScanRow {
            l2,
            csc_count: csc.len(),
            critical_count: criticals.len(),
            classifications: criticals.iter().map(|c| c.classification).collect(),
        });
    }
    Ok(rows)
}

/// Options controlling `full_report`.
#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub tolerance: BigRational,
    /// Scan range for the admissibility window, when the extremal section
    /// is requested.
    pub extremal_window: Option<(BigRational, BigRational)>,
    /// Include per-ray extremal solutions for the requested rays.
    pub extremal_rays: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            tolerance: default_tolerance(),
            extremal_window: None,
            extremal_rays: false,
        }
    }
}

/// Coefficient arrays (ascending, `"p/q"` strings) of every closed form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolynomialSummary {
    pub s_num: Vec<String>,
    pub v_num: Vec<String>,
    pub f: Vec<String>,
    pub f_csc: Vec<String>,
    pub h_num: Vec<String>,
    pub h_den: Vec<String>,
    pub dh_num: Vec<String>,
    pub dh_den: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WindowRecord {
    #[serde(with = "crate::ratio::rat_pq")]
    pub b1: BigRational,
    pub b1_decimal: String,
    #[serde(with = "crate::ratio::rat_pq")]
    pub b2: BigRational,
    pub b2_decimal: String,
    #[serde(with = "crate::ratio::rat_pq")]
    pub tolerance: BigRational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremalRayRecord {
    pub v1: u64,
    pub v2: u64,
    #[serde(with = "crate::ratio::rat_pq")]
    pub b: BigRational,
    #[serde(with = "crate::ratio::rat_pq")]
    pub alpha: BigRational,
    #[serde(with = "crate::ratio::rat_pq")]
    pub beta: BigRational,
    pub admissible: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExtremalReport {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub window: Option<WindowRecord>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub window_note: Option<String>,
    pub rays: Vec<ExtremalRayRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportMeta {
    pub tool: String,
    pub version: String,
    #[serde(with = "crate::ratio::rat_pq")]
    pub tolerance: BigRational,
}

/// The aggregate per-manifold report; field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub params: JoinParamsRaw,
    pub polynomials: PolynomialSummary,
    pub critical_points: Vec<CriticalPoint>,
    pub csc_rays: Vec<RootRecord>,
    pub null_scalar_rays: Vec<RootRecord>,
    pub boundary: BoundaryBehavior,
    pub verdicts: Vec<StabilityVerdict>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub extremal: Option<ExtremalReport>,
    pub meta: ReportMeta,
}

/// Assemble the full per-manifold report for the given parameter set and
/// rays to judge.
pub fn full_report(
    params: &JoinParams,
    rays: &[RayId],
    options: &ReportOptions,
) -> Result<AnalysisReport, AnalysisError> {
    let bundle = FunctionalBundle::new(params.clone())?;
    let tol = &options.tolerance;
    let criticals = critical_points(&bundle, tol)?;
    let csc = csc_rays(&bundle)?
        .into_iter()
        .map(|iv| {
            let mut rec = root_record(bundle.f_csc(), iv, tol)?;
            rec.note = Some(
                "cscS ray (up to isotopy); the w-cone Futaki zero extends to the full \
                 Sasaki-Futaki invariant"
                    .to_string(),
            );
            Ok(rec)
        })
        .collect::<Result<Vec<_>, AnalysisError>>()?;
    let null_scalar = null_scalar_rays(&bundle)?
        .into_iter()
        .map(|iv| root_record(bundle.s_num(), iv, tol))
        .collect::<Result<Vec<_>, AnalysisError>>()?;
    let boundary = boundary_check(&bundle)?;
    let verdicts = rays
        .iter()
        .map(|ray| stability_verdict(&bundle, &ray.b()))
        .collect::<Result<Vec<_>, AnalysisError>>()?;

    let extremal = if options.extremal_window.is_some() || options.extremal_rays {
        let mut window = None;
        let mut window_note = None;
        if let Some((b_lo, b_hi)) = &options.extremal_window {
            match admissibility_boundary(params, b_lo, b_hi, tol_window(tol)) {
                Ok((b1, b2)) => {
                    window = Some(WindowRecord {
                        b1_decimal: decimal_sig(&b1, 6),
                        b1,
                        b2_decimal: decimal_sig(&b2, 6),
                        b2,
                        tolerance: tol_window(tol).clone(),
                    });
                }
                Err(e @ ExtremalError::NoTransition(_)) => {
                    window_note = Some(e.to_string());
                }
                Err(e) => return Err(e.into()),
            }
        }
        let mut recs = Vec::new();
        if options.extremal_rays {
            for ray in rays {
                let sol = extremal_solution(params, ray)?;
                recs.push(ExtremalRayRecord {
                    v1: ray.v1(),
                    v2: ray.v2(),
                    b: ray.b(),
                    alpha: sol.alpha.clone(),
                    beta: sol.beta.clone(),
                    admissible: sol.is_admissible(),
                });
            }
        }
        Some(ExtremalReport {
            window,
            window_note,
            rays: recs,
        })
    } else {
        None
    };

    Ok(AnalysisReport {
        params: JoinParamsRaw::from(params.clone()),
        polynomials: PolynomialSummary {
            s_num: bundle.s_num().to_pq_strings(),
            v_num: bundle.v_num().to_pq_strings(),
            f: bundle.f().to_pq_strings(),
            f_csc: bundle.f_csc().to_pq_strings(),
            h_num: bundle.h().num().to_pq_strings(),
            h_den: bundle.h().den().to_pq_strings(),
            dh_num: bundle.dh().num().to_pq_strings(),
            dh_den: bundle.dh().den().to_pq_strings(),
        },
        critical_points: criticals,
        csc_rays: csc,
        null_scalar_rays: null_scalar,
        boundary,
        verdicts,
        extremal,
        meta: ReportMeta {
            tool: "wcone".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            tolerance: options.tolerance.clone(),
        },
    })
}

/// Window localization uses a coarser floor than root refinement: 1/100
/// unless the caller asked for something coarser.
fn tol_window(tol: &BigRational) -> &BigRational {
    static CENTI: std::sync::OnceLock<BigRational> = std::sync::OnceLock::new();
    let centi = CENTI.get_or_init(|| rat(1, 100));
    if tol > centi {
        tol
    } else {
        centi
    }
}
