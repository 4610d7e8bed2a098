//! Exact-arithmetic analysis of the Einstein-Hilbert functional on the
//! w-cone of Sasaki join manifolds.
//!
//! Given a join datum `(d_N, A, l1, l2, w)` the crate builds the closed-form
//! polynomials and rational functions of the scale-invariant coordinate
//! `b = v2/v1` on the w-cone: the total transverse scalar curvature and
//! volume numerators, the Einstein-Hilbert functional `H(b)` and its
//! derivatives, and the polynomial `f_CSC(b)` whose positive roots are the
//! constant-scalar-curvature rays. On top of those it classifies every
//! critical ray of `H`, issues K-(semi)stability verdicts, evaluates the
//! Sasaki-Futaki value of a ray, and certifies extremal admissibility by
//! solving the admissible extremal ODE exactly.
//!
//! Everything is computed over arbitrary-precision rationals; no decision
//! anywhere depends on floating point.

pub mod analysis;
pub mod cli;
pub mod extremal;
pub mod functionals;
pub mod join;
pub mod poly;
pub mod ratio;
pub mod roots;
pub mod verify;

pub use analysis::{
    boundary_check, critical_points, csc_rays, full_report, null_scalar_rays, scan_l2,
    stability_verdict, AnalysisReport, Classification, CriticalPoint, CriticalSource,
    ReportOptions, StabilityVerdict,
};
pub use extremal::{admissibility_boundary, extremal_solution, ExtremalSolution};
pub use functionals::{
    einstein_hilbert, f_csc, f_polynomial, futaki_value, scalar_numerator, total_scalar,
    total_volume, volume_numerator, FunctionalBundle,
};
pub use join::{quotient_data, BaseSpace, JoinParams, QuotientData, RayId};
pub use poly::{RationalFn, UniPoly};
pub use roots::{
    descartes_positive_bound, isolate_positive_roots, positive_on_open_interval, refine_root,
    sturm_count, Bound, IsolatingInterval,
};
