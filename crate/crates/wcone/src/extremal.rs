//! The admissible extremal construction for a quasi-regular ray.
//!
//! On the orbifold quotient of a non-regular ray, requiring the transverse
//! scalar curvature `Scal_B(z) = 2 d_N s_N r / (1 + r z) - F''(z)/(1 + r z)^d_N`
//! to be an affine function `alpha + beta z` turns the profile `F` into a
//! polynomial: twice antidifferentiate
//! `F''(z) = 2 d_N s_N r (1 + r z)^(d_N - 1) - (alpha + beta z)(1 + r z)^d_N`
//! and solve the 4x4 linear system in `(alpha, beta, c1, c2)` cut out by the
//! endpoint conditions `F(±1) = 0`, `F'(-1) = 2 (1-r)^d_N / m2`,
//! `F'(1) = -2 (1+r)^d_N / m1`. The ray carries an admissible extremal
//! metric exactly when `F > 0` strictly on `(-1, 1)`.

use crate::join::{quotient_data, JoinParams, QuotientData, RayId};
use crate::poly::UniPoly;
use crate::ratio::{rat, rat_int, to_pq};
use crate::roots::positive_on_open_interval;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExtremalError {
    #[error("extremal construction undefined at b = w2/w1 (regular ray)")]
    RegularRay,
    #[error("degenerate endpoint system")]
    DegenerateEndpointSystem,
    #[error("endpoint or ODE residual violated: {0}")]
    ResidualNonzero(String),
    #[error("no admissibility transition found ({0})")]
    NoTransition(String),
    #[error("invalid scan range: {0}")]
    BadScanRange(String),
    #[error(transparent)]
    Join(#[from] crate::join::JoinError),
}

/// Exact solution of the extremal endpoint problem for one ray.
#[derive(Clone, Debug)]
pub struct ExtremalSolution {
    pub ray: RayId,
    pub quotient: QuotientData,
    /// `s_N = A / n_deg = A s / (l1 (w1 v2 - w2 v1))`.
    pub s_n: BigRational,
    pub alpha: BigRational,
    pub beta: BigRational,
    /// The extremal profile polynomial in the fiber coordinate `z`.
    pub f: UniPoly,
    admissible: bool,
}

impl ExtremalSolution {
    /// Strict positivity of `F` on the open interval `(-1, 1)`, decided
    /// exactly at construction time.
    pub fn is_admissible(&self) -> bool {
        self.admissible
    }
}

/// Solve the extremal ODE with endpoint conditions for a non-regular ray.
pub fn extremal_solution(
    params: &JoinParams,
    ray: &RayId,
) -> Result<ExtremalSolution, ExtremalError> {
    let quotient = quotient_data(params, ray);
    if quotient.regular {
        return Err(ExtremalError::RegularRay);
    }
    let d = params.d_n();
    let r = quotient.r.clone();
    let s_n = params.a() / BigRational::from_integer(quotient.n_deg.clone());

    // p(z) = (1 + r z)^d_N.
    let one_rz = UniPoly::new(vec![BigRational::one(), r.clone()]);
    let pw = one_rz.pow(d);
    let pw1 = one_rz.pow(d - 1);

    // F = F0 + alpha Fa + beta Fb + c1 z + c2 with
    // F0'' = 2 d s_N r (1+rz)^(d-1), Fa'' = -(1+rz)^d, Fb'' = -z (1+rz)^d.
    let two = rat_int(2);
    let f0 = pw1
        .scaled(&(&two * rat_int(d as i64) * &s_n * &r))
        .antiderivative()
        .antiderivative();
    let fa = (-&pw).antiderivative().antiderivative();
    let fb = (-&(&UniPoly::var() * &pw)).antiderivative().antiderivative();

    let one = rat_int(1);
    let neg_one = rat_int(-1);
    let m1 = BigRational::from_integer(quotient.m1.clone());
    let m2 = BigRational::from_integer(quotient.m2.clone());
    let p_at_1 = pw.eval(&one);
    let p_at_m1 = pw.eval(&neg_one);

    // Rows: F(1) = 0, F(-1) = 0, F'(1) = -2 p(1)/m1, F'(-1) = 2 p(-1)/m2,
    // in the unknown order (alpha, beta, c1, c2).
    let f0d = f0.derivative();
    let fad = fa.derivative();
    let fbd = fb.derivative();
    let rows = [
        [
            fa.eval(&one),
            fb.eval(&one),
            one.clone(),
            one.clone(),
            -f0.eval(&one),
        ],
        [
            fa.eval(&neg_one),
            fb.eval(&neg_one),
            neg_one.clone(),
            one.clone(),
            -f0.eval(&neg_one),
        ],
        [
            fad.eval(&one),
            fbd.eval(&one),
            one.clone(),
            BigRational::zero(),
            -f0d.eval(&one) - &two * &p_at_1 / &m1,
        ],
        [
            fad.eval(&neg_one),
            fbd.eval(&neg_one),
            one.clone(),
            BigRational::zero(),
            -f0d.eval(&neg_one) + &two * &p_at_m1 / &m2,
        ],
    ];
    let [alpha, beta, c1, c2] = solve4(rows).ok_or(ExtremalError::DegenerateEndpointSystem)?;

    let f = &(&(&f0 + &fa.scaled(&alpha)) + &fb.scaled(&beta))
        + &UniPoly::new(vec![c2.clone(), c1.clone()]);

    // The endpoint conditions and the ODE residual must hold exactly.
    check_zero(&f.eval(&one), "F(1)")?;
    check_zero(&f.eval(&neg_one), "F(-1)")?;
    let fd = f.derivative();
    check_zero(&(fd.eval(&one) + &two * &p_at_1 / &m1), "F'(1)")?;
    check_zero(&(fd.eval(&neg_one) - &two * &p_at_m1 / &m2), "F'(-1)")?;
    let affine = UniPoly::new(vec![alpha.clone(), beta.clone()]);
    let residual = &(&f.derivative().derivative() + &(&affine * &pw))
        - &pw1.scaled(&(&two * rat_int(d as i64) * &s_n * &r));
    if !residual.is_zero() {
        return Err(ExtremalError::ResidualNonzero(format!("{residual:?}")));
    }

    let admissible = positive_on_open_interval(&f, &neg_one, &one);
    Ok(ExtremalSolution {
        ray: ray.clone(),
        quotient,
        s_n,
        alpha,
        beta,
        f,
        admissible,
    })
}

fn check_zero(v: &BigRational, what: &str) -> Result<(), ExtremalError> {
    if v.is_zero() {
        Ok(())
    } else {
        Err(ExtremalError::ResidualNonzero(format!("{what} = {}", to_pq(v))))
    }
}

/// Exact Gaussian elimination on a 4x5 augmented system.
fn solve4(mut m: [[BigRational; 5]; 4]) -> Option<[BigRational; 4]> {
    for col in 0..4 {
        let pivot = (col..4).find(|&row| !m[row][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for cell in m[col][col..].iter_mut() {
            *cell = &*cell * &inv;
        }
        let pivot_row = m[col].clone();
        for (row, r) in m.iter_mut().enumerate() {
            if row != col && !r[col].is_zero() {
                let factor = r[col].clone();
                for (cell, p) in r[col..].iter_mut().zip(&pivot_row[col..]) {
                    let t = &factor * p;
                    *cell -= t;
                }
            }
        }
    }
    Some([
        m[0][4].clone(),
        m[1][4].clone(),
        m[2][4].clone(),
        m[3][4].clone(),
    ])
}

/// Whether the ray at rational `b` carries an admissible extremal metric.
/// Errors on the regular value `b = w2/w1`.
pub fn admissible_at(params: &JoinParams, b: &BigRational) -> Result<bool, ExtremalError> {
    let ray = RayId::from_b(b)?;
    Ok(extremal_solution(params, &ray)?.is_admissible())
}

/// Localize both admissibility window boundaries in `(b_lo, b_hi)` to width
/// `tol` by probing a rational grid and bisecting each transition. Probes
/// that would land on the regular value are deterministically nudged.
pub fn admissibility_boundary(
    params: &JoinParams,
    b_lo: &BigRational,
    b_hi: &BigRational,
    tol: &BigRational,
) -> Result<(BigRational, BigRational), ExtremalError> {
    if !(b_lo.is_positive() && b_lo < b_hi && tol.is_positive()) {
        return Err(ExtremalError::BadScanRange(format!(
            "need 0 < b_lo < b_hi and tol > 0, got ({}, {}, {})",
            to_pq(b_lo),
            to_pq(b_hi),
            to_pq(tol)
        )));
    }
    let regular = params.regular_b();
    let probe = |b: &BigRational| -> Result<bool, ExtremalError> {
        admissible_at(params, b)
    };
    let grid_n = 20i64;
    let step = (b_hi - b_lo) / rat_int(grid_n - 1);
    let mut grid = Vec::with_capacity(grid_n as usize);
    for k in 0..grid_n {
        let mut b = b_lo + &step * rat_int(k);
        if b == regular {
            b += &step / rat_int(64);
        }
        let adm = probe(&b)?;
        grid.push((b, adm));
    }
    let first = grid.iter().position(|(_, adm)| *adm);
    let last = grid.iter().rposition(|(_, adm)| *adm);
    let (Some(i0), Some(i1)) = (first, last) else {
        return Err(ExtremalError::NoTransition(
            "no admissible probe in the scan range".into(),
        ));
    };
    if i0 == 0 && i1 == grid.len() - 1 {
        return Err(ExtremalError::NoTransition(
            "admissible throughout sampled probes".into(),
        ));
    }
    if i0 == 0 {
        return Err(ExtremalError::NoTransition("no lower transition".into()));
    }
    if i1 == grid.len() - 1 {
        return Err(ExtremalError::NoTransition("no upper transition".into()));
    }
    let bisect = |mut lo: BigRational,
                  mut hi: BigRational,
                  lo_adm: bool|
     -> Result<BigRational, ExtremalError> {
        while &hi - &lo > *tol {
            let mut mid = (&lo + &hi) / rat_int(2);
            if mid == regular {
                mid = &lo + (&hi - &lo) * rat(31, 64);
            }
            if probe(&mid)? == lo_adm {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok((&lo + &hi) / rat_int(2))
    };
    let b1 = bisect(grid[i0 - 1].0.clone(), grid[i0].0.clone(), false)?;
    let b2 = bisect(grid[i1].0.clone(), grid[i1 + 1].0.clone(), true)?;
    Ok((b1, b2))
}
