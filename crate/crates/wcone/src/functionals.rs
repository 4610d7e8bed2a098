//! Closed forms on the w-cone: total transverse scalar curvature, volume,
//! the Einstein-Hilbert functional `H(b)`, its derivatives, the polynomials
//! `f` and `f_CSC`, and the Sasaki-Futaki value of a ray.
//!
//! Conventions: the global positive factor `2^(d_N+1) (l1/l2)^(d_N)` common
//! to all rays is dropped, so every quantity here is normalized; signs,
//! zeros, and classifications are unaffected. Writing `n = d_N + 1` for the
//! transverse complex dimension, `H = S^(n+1) / V^n` becomes, in terms of
//! the numerator polynomials below, `H(b) = S_num^(d_N+2) / (b V_num)^(d_N+1)`.

use crate::join::{JoinParams, RayId};
use crate::poly::{AlgebraError, RationalFn, UniPoly};
use crate::ratio::rat_pow;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FunctionalError {
    #[error("closed-form inconsistency: variational route {variational:?} vs division route {divided:?}")]
    ClosedFormInconsistency {
        variational: UniPoly,
        divided: UniPoly,
    },
    #[error("derivative identity failure: quotient rule {quotient_rule:?} vs closed form {closed_form:?}")]
    DerivativeIdentity {
        quotient_rule: RationalFn,
        closed_form: RationalFn,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn big(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn big_pow(base: u64, exp: u32) -> BigRational {
    BigRational::from_integer(BigInt::from(base).pow(exp))
}

/// Numerator of the total transverse scalar curvature:
/// `S_num(b) = l2 A sum_{j=1..d_N} w1^(d_N-j) w2^(j-1) b^(d_N+1-j)
///             + l1 (w1^d_N b^(d_N+1) + w2^d_N)`.
pub fn scalar_numerator(params: &JoinParams) -> UniPoly {
    let d = params.d_n();
    let l1 = big(params.l1());
    let l2a = big(params.l2()) * params.a();
    let mut coeffs = vec![BigRational::zero(); d as usize + 2];
    coeffs[0] = &l1 * big_pow(params.w2(), d);
    coeffs[d as usize + 1] = &l1 * big_pow(params.w1(), d);
    for k in 1..=d {
        // k = d_N + 1 - j, so the weight exponents are (k-1, d_N-k).
        coeffs[k as usize] = &l2a * big_pow(params.w1(), k - 1) * big_pow(params.w2(), d - k);
    }
    UniPoly::new(coeffs)
}

/// Numerator of the volume: `V_num(b) = sum_{j=0..d_N} w1^(d_N-j) w2^j b^(d_N-j)`.
/// All coefficients are positive, so `V_num(b) > 0` for every `b > 0`.
pub fn volume_numerator(params: &JoinParams) -> UniPoly {
    let d = params.d_n();
    let coeffs = (0..=d)
        .map(|k| big_pow(params.w1(), k) * big_pow(params.w2(), d - k))
        .collect();
    UniPoly::new(coeffs)
}

/// Normalized total transverse scalar curvature of a ray:
/// `S_num(b) / (v1^(d_N+1) b^(d_N+1))`.
pub fn total_scalar(params: &JoinParams, ray: &RayId) -> BigRational {
    total_scalar_at(params, &big(ray.v1()), &big(ray.v2()))
}

/// Normalized volume of a ray: `V_num(b) / (v1^(d_N+2) b^(d_N+1))`; always positive.
pub fn total_volume(params: &JoinParams, ray: &RayId) -> BigRational {
    total_volume_at(params, &big(ray.v1()), &big(ray.v2()))
}

/// `total_scalar` on the non-reduced formula, for arbitrary positive rational
/// components (used to check homogeneity under `(v1, v2) -> (λv1, λv2)`).
pub fn total_scalar_at(params: &JoinParams, v1: &BigRational, v2: &BigRational) -> BigRational {
    let d = params.d_n() as i64;
    let b = v2 / v1;
    scalar_numerator(params).eval(&b) / (rat_pow(v1, d + 1) * rat_pow(&b, d + 1))
}

/// `total_volume` on the non-reduced formula for rational components.
pub fn total_volume_at(params: &JoinParams, v1: &BigRational, v2: &BigRational) -> BigRational {
    let d = params.d_n() as i64;
    let b = v2 / v1;
    volume_numerator(params).eval(&b) / (rat_pow(v1, d + 2) * rat_pow(&b, d + 1))
}

/// The Einstein-Hilbert functional as a reduced rational function:
/// `H(b) = S_num^(d_N+2) / (b V_num)^(d_N+1)`.
pub fn einstein_hilbert(params: &JoinParams) -> RationalFn {
    let d = params.d_n();
    let s = scalar_numerator(params);
    let bv = &UniPoly::var() * &volume_numerator(params);
    RationalFn::new(s.pow(d + 2), bv.pow(d + 1)).expect("nonzero denominator")
}

/// The degree-`(2 d_N + 4)` polynomial `f(b)` with the seven coefficient
/// groups of the closed form; `f = -f_CSC (w1 b - w2)^3` exactly.
pub fn f_polynomial(params: &JoinParams) -> UniPoly {
    let d = params.d_n();
    let du = d as usize;
    let w1 = params.w1();
    let w2 = params.w2();
    let l1 = big(params.l1());
    let al2 = big(params.l2()) * params.a();
    let dp1 = big(d as u64 + 1);
    let dp2 = big(d as u64 + 2);
    let mut coeffs = vec![BigRational::zero(); 2 * du + 5];
    coeffs[2 * du + 4] = -(&dp1 * &l1 * big_pow(w1, 2 * d + 3));
    coeffs[2 * du + 3] = big_pow(w1, 2 * d + 2) * (&al2 + &l1 * &dp1 * big(w2));
    coeffs[du + 3] = -(big_pow(w1, d + 2)
        * big_pow(w2, d)
        * &dp1
        * (&al2 * &dp1 - &l1 * (&dp1 * big(w1) + &dp2 * big(w2))));
    coeffs[du + 2] = big_pow(w1, d + 1)
        * big_pow(w2, d + 1)
        * (BigRational::from_integer(BigInt::from(2)) * &al2 * big(d as u64) * &dp2
            - &dp1 * big(2 * d as u64 + 3) * &l1 * big(w1 + w2));
    coeffs[du + 1] = -(big_pow(w1, d)
        * big_pow(w2, d + 2)
        * &dp1
        * (&al2 * &dp1 - &l1 * (&dp2 * big(w1) + &dp1 * big(w2))));
    coeffs[1] = big_pow(w2, 2 * d + 2) * (&al2 + &l1 * &dp1 * big(w1));
    coeffs[0] = -(&dp1 * &l1 * big_pow(w2, 2 * d + 3));
    UniPoly::new(coeffs)
}

/// `f_CSC(b)`, the numerator of the Sasaki-Futaki value along the w-cone.
///
/// Primary construction is the variational identity
/// `f_CSC = (d_N+2) S_num' (b V_num) - (d_N+1) S_num (b V_num)'`;
/// the exact division `-f / (w1 b - w2)^3` is a mandatory cross-check and
/// any mismatch is surfaced as a hard error.
pub fn f_csc(params: &JoinParams) -> Result<UniPoly, FunctionalError> {
    let variational = f_csc_variational(params);
    let cubic = linear_w(params).pow(3);
    let neg_f = -&f_polynomial(params);
    let (quot, rem) = neg_f.divrem(&cubic)?;
    if !rem.is_zero() || quot != variational {
        return Err(FunctionalError::ClosedFormInconsistency {
            variational,
            divided: quot,
        });
    }
    Ok(variational)
}

/// The variational route alone (exposed for the identity test suites).
pub fn f_csc_variational(params: &JoinParams) -> UniPoly {
    let d = params.d_n();
    let s = scalar_numerator(params);
    let bv = &UniPoly::var() * &volume_numerator(params);
    let dp1 = UniPoly::constant(big(d as u64 + 1));
    let dp2 = UniPoly::constant(big(d as u64 + 2));
    &(&dp2 * &(&s.derivative() * &bv)) - &(&dp1 * &(&s * &bv.derivative()))
}

/// `w1 b - w2`.
pub fn linear_w(params: &JoinParams) -> UniPoly {
    UniPoly::new(vec![-big(params.w2()), big(params.w1())])
}

/// `H'(b)` by the symbolic quotient rule, checked against the closed form
/// `S_num^(d_N+1) f_CSC / (b^(d_N+2) V_num^(d_N+2))` as reduced functions.
pub fn eh_derivative(params: &JoinParams) -> Result<RationalFn, FunctionalError> {
    let quotient_rule = einstein_hilbert(params).derivative();
    let closed_form = eh_derivative_closed_form(params)?;
    if quotient_rule != closed_form {
        return Err(FunctionalError::DerivativeIdentity {
            quotient_rule,
            closed_form,
        });
    }
    Ok(quotient_rule)
}

/// The closed form of `H'` before reduction (numerator `S_num^(d_N+1) f_CSC`).
pub fn eh_derivative_closed_form(params: &JoinParams) -> Result<RationalFn, FunctionalError> {
    let d = params.d_n();
    let s = scalar_numerator(params);
    let num = &s.pow(d + 1) * &f_csc_variational(params);
    let den = &UniPoly::monomial(BigRational::one(), d as usize + 2)
        * &volume_numerator(params).pow(d + 2);
    Ok(RationalFn::new(num, den)?)
}

/// `H''(b)`, the symbolic derivative of `H'`.
pub fn eh_second_derivative(params: &JoinParams) -> Result<RationalFn, FunctionalError> {
    Ok(eh_derivative(params)?.derivative())
}

/// Normalized Sasaki-Futaki value of a ray:
/// `f_CSC(b) / (v2^(2 d_N + 3) V)`, zero exactly at cscS rays.
pub fn futaki_value(params: &JoinParams, ray: &RayId) -> Result<BigRational, FunctionalError> {
    let d = params.d_n() as i64;
    let b = ray.b();
    let vol = total_volume(params, ray);
    Ok(f_csc(params)?.eval(&b) / (rat_pow(&big(ray.v2()), 2 * d + 3) * vol))
}

/// All closed forms of one parameter set, built once with every
/// cross-identity verified during construction.
#[derive(Clone, Debug)]
pub struct FunctionalBundle {
    params: JoinParams,
    s_num: UniPoly,
    v_num: UniPoly,
    h: RationalFn,
    f: UniPoly,
    f_csc: UniPoly,
    dh: RationalFn,
    d2h: RationalFn,
}

impl FunctionalBundle {
    pub fn new(params: JoinParams) -> Result<Self, FunctionalError> {
        let s_num = scalar_numerator(&params);
        let v_num = volume_numerator(&params);
        let h = einstein_hilbert(&params);
        let f = f_polynomial(&params);
        let f_csc = f_csc(&params)?;
        let dh = eh_derivative(&params)?;
        let d2h = dh.derivative();
        Ok(FunctionalBundle {
            params,
            s_num,
            v_num,
            h,
            f,
            f_csc,
            dh,
            d2h,
        })
    }

    pub fn params(&self) -> &JoinParams {
        &self.params
    }

    pub fn s_num(&self) -> &UniPoly {
        &self.s_num
    }

    pub fn v_num(&self) -> &UniPoly {
        &self.v_num
    }

    pub fn h(&self) -> &RationalFn {
        &self.h
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub fn f_csc(&self) -> &UniPoly {
        &self.f_csc
    }

    pub fn dh(&self) -> &RationalFn {
        &self.dh
    }

    pub fn d2h(&self) -> &RationalFn {
        &self.d2h
    }

    /// Numerator polynomial of `H'` before reduction; its positive roots are
    /// exactly the critical rays.
    pub fn dh_numerator(&self) -> UniPoly {
        &self.s_num.pow(self.params.d_n() + 1) * &self.f_csc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::join::JoinParams;
    use crate::ratio::{rat, rat_int};
    use num_traits::Signed;

    fn triple_csc() -> JoinParams {
        JoinParams::new(2, rat_int(1), 1, 29, 3, 2).unwrap()
    }

    fn genus2(l2: u64) -> JoinParams {
        JoinParams::new(1, rat_int(-2), 1, l2, 3, 2).unwrap()
    }

    fn null_scalar_csc() -> JoinParams {
        JoinParams::new(1, rat_int(-12), 1, 1, 9, 4).unwrap()
    }

    #[test]
    fn scalar_numerator_golden() {
        assert_eq!(
            scalar_numerator(&triple_csc()),
            UniPoly::from_int_coeffs(&[4, 58, 87, 9])
        );
        assert_eq!(
            scalar_numerator(&genus2(1)),
            UniPoly::from_int_coeffs(&[2, -2, 3])
        );
        assert_eq!(
            scalar_numerator(&genus2(101)),
            UniPoly::from_int_coeffs(&[2, -202, 3])
        );
        // A = 0 drops the interior terms.
        let p = JoinParams::new(1, rat_int(0), 5, 1, 3, 2).unwrap();
        assert_eq!(scalar_numerator(&p), UniPoly::from_int_coeffs(&[10, 0, 15]));
    }

    #[test]
    fn volume_numerator_golden() {
        assert_eq!(
            volume_numerator(&triple_csc()),
            UniPoly::from_int_coeffs(&[4, 6, 9])
        );
        assert_eq!(volume_numerator(&genus2(7)), UniPoly::from_int_coeffs(&[2, 3]));
        let p = JoinParams::new(1, rat_int(0), 1, 1, 1, 1).unwrap();
        assert_eq!(volume_numerator(&p), UniPoly::from_int_coeffs(&[1, 1]));
    }

    #[test]
    fn total_scalar_and_volume_values() {
        let p = triple_csc();
        let ray = RayId::new(1, 1).unwrap();
        assert_eq!(total_scalar(&p, &ray), rat_int(158));
        assert_eq!(total_volume(&p, &ray), rat_int(19));
        // Null-scalar configuration vanishes at the regular value.
        let q = null_scalar_csc();
        let ray32 = RayId::new(3, 2).unwrap();
        assert_eq!(total_scalar(&q, &ray32), rat_int(0));
        // Volume stays positive.
        assert!(total_volume(&q, &ray32).is_positive());
        let g = genus2(7);
        let ray12 = RayId::new(1, 2).unwrap();
        assert_eq!(total_volume(&g, &ray12), rat_int(2));
    }

    #[test]
    fn einstein_hilbert_display_and_value() {
        let p = triple_csc();
        let h = einstein_hilbert(&p);
        let s = UniPoly::from_int_coeffs(&[4, 58, 87, 9]);
        let bv = &UniPoly::var() * &UniPoly::from_int_coeffs(&[4, 6, 9]);
        assert_eq!(h.num(), &s.pow(4));
        assert_eq!(h.den(), &bv.pow(3));
        assert_eq!(
            h.eval(&rat_int(1)).unwrap(),
            rat(623_201_296, 6859)
        );
        // Genus-2 family: (3b^2 - 2 l2 b + 2)^3 / (b^2 (3b + 2)^2).
        let g = genus2(101);
        let hg = einstein_hilbert(&g);
        assert_eq!(hg.num(), &UniPoly::from_int_coeffs(&[2, -202, 3]).pow(3));
        let bvg = &UniPoly::var() * &UniPoly::from_int_coeffs(&[2, 3]);
        assert_eq!(hg.den(), &bvg.pow(2));
    }

    #[test]
    fn f_polynomial_instantiates_the_seven_groups() {
        // d_N = 1, l1 = 1, w = (3, 2), A = -2, at l2 = 1 and l2 = 101:
        // -486 b^6 + (324 - 162 l2) b^5 + (432 l2 + 1296) b^4
        // - (432 l2 + 1800) b^3 + (192 l2 + 624) b^2 + (96 - 32 l2) b - 64.
        for l2 in [1u64, 101] {
            let f = f_polynomial(&genus2(l2));
            let l2i = l2 as i64;
            let expect = UniPoly::from_int_coeffs(&[
                -64,
                96 - 32 * l2i,
                192 * l2i + 624,
                -(432 * l2i + 1800),
                432 * l2i + 1296,
                324 - 162 * l2i,
                -486,
            ]);
            assert_eq!(f, expect);
        }
    }

    #[test]
    fn f_has_cubic_root_at_the_regular_value() {
        let f = f_polynomial(&triple_csc());
        assert_eq!(f.root_multiplicity(&rat(2, 3)).unwrap(), 3);
        // Equal weights force order at least four at b = 1.
        let p = JoinParams::new(2, rat_int(3), 1, 5, 1, 1).unwrap();
        let f11 = f_polynomial(&p);
        assert!(f11.root_multiplicity(&rat_int(1)).unwrap() >= 4);
    }

    #[test]
    fn f_csc_golden_quintic() {
        let fc = f_csc(&triple_csc()).unwrap();
        assert_eq!(fc, UniPoly::from_int_coeffs(&[-48, 88, 720, -1242, -459, 243]));
        assert_eq!(fc.eval(&rat_int(0)), rat_int(-48));
        assert_eq!(fc.eval(&rat(1, 3)), rat(32, 3));
        assert_eq!(fc.eval(&rat(2, 3)), rat_int(-96));
    }

    #[test]
    fn f_csc_division_example() {
        // (-f) / (3b - 2)^3 for the genus-2 configuration at l2 = 1.
        let p = genus2(1);
        let cubic = linear_w(&p).pow(3);
        let neg_f = -&f_polynomial(&p);
        let (q, r) = neg_f.divrem(&cubic).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, UniPoly::from_int_coeffs(&[-8, -28, 30, 18]));
        assert_eq!(q, f_csc_variational(&p));
    }

    #[test]
    fn f_csc_vanishes_for_null_scalar_config() {
        let fc = f_csc(&null_scalar_csc()).unwrap();
        assert_eq!(fc, UniPoly::from_int_coeffs(&[-32, -192, 252, 162]));
        assert_eq!(fc.eval(&rat(2, 3)), rat_int(0));
    }

    #[test]
    fn eh_derivative_matches_display() {
        let p = triple_csc();
        let dh = eh_derivative(&p).unwrap();
        let s = UniPoly::from_int_coeffs(&[4, 58, 87, 9]);
        let fc = UniPoly::from_int_coeffs(&[-48, 88, 720, -1242, -459, 243]);
        let num = &s.pow(3) * &fc;
        let den = &UniPoly::monomial(rat_int(1), 4) * &UniPoly::from_int_coeffs(&[4, 6, 9]).pow(4);
        assert_eq!(dh, RationalFn::new(num, den).unwrap());
        // sign(H') = sign(f_CSC) where the scalar term is positive.
        for b in [rat(1, 3), rat(2, 3)] {
            let s_dh = dh.sign_at(&b).unwrap();
            let s_fc = fc.sign_at(&b);
            assert_eq!(s_dh, s_fc);
        }
    }

    #[test]
    fn symmetric_bundle_is_critical_at_one() {
        // d_N = 1, w = (1,1), A = 0: the b <-> 1/b symmetry pins b = 1.
        let p = JoinParams::new(1, rat_int(0), 1, 1, 1, 1).unwrap();
        let dh = eh_derivative(&p).unwrap();
        assert_eq!(dh.eval(&rat_int(1)).unwrap(), rat_int(0));
        let d2h = eh_second_derivative(&p).unwrap();
        assert!(d2h.eval(&rat_int(1)).unwrap().is_positive());
    }

    #[test]
    fn futaki_values() {
        // Vanishes exactly at a rational csc ray.
        let q = null_scalar_csc();
        let ray = RayId::new(3, 2).unwrap();
        assert_eq!(futaki_value(&q, &ray).unwrap(), rat_int(0));
        // Negative at b = 1/2 for the genus-2 family at l2 = 101:
        // f_CSC(1/2) = -249/4 and the volume is positive.
        let g = genus2(101);
        let fc = f_csc(&g).unwrap();
        assert_eq!(fc.eval(&rat(1, 2)), rat(-249, 4));
        let ray21 = RayId::new(2, 1).unwrap();
        assert!(futaki_value(&g, &ray21).unwrap().is_negative());
    }

    #[test]
    fn bundle_builds_with_all_identities() {
        for params in [triple_csc(), genus2(1), genus2(101), null_scalar_csc()] {
            let b = FunctionalBundle::new(params).unwrap();
            assert!(b.v_num().coeffs().iter().all(|c| c.is_positive()));
        }
    }

    /// The single-fraction display of H (numerator and denominator each
    /// carrying an extra (w1 b - w2)^(d_N+2) factor) reduces to the same
    /// canonical rational function away from its removable singularity.
    #[test]
    fn he2_display_reduces_to_h() {
        for params in [
            triple_csc(),
            genus2(1),
            genus2(101),
            null_scalar_csc(),
            JoinParams::new(3, rat(7, 2), 2, 5, 4, 3).unwrap(),
        ] {
            let d = params.d_n();
            let lw = linear_w(&params);
            let num_base = &scalar_numerator(&params) * &lw;
            let den_base = &(&UniPoly::var() * &volume_numerator(&params)) * &lw;
            let he2 = RationalFn::new(num_base.pow(d + 2), &lw * &den_base.pow(d + 1)).unwrap();
            assert_eq!(he2, einstein_hilbert(&params), "params {params:?}");
        }
    }

    #[test]
    fn futaki_sign_follows_f_csc() {
        // The denominator v2^(2d_N+3) V is positive, so the sign of the
        // Futaki value is the sign of f_CSC(b); spot-check 50 rays.
        let g = genus2(101);
        let fc = f_csc(&g).unwrap();
        let mut checked = 0;
        for v1 in 1u64..=10 {
            for v2 in 1u64..=10 {
                let Ok(ray) = RayId::new(v1, v2) else { continue };
                if checked == 50 {
                    break;
                }
                let fut = futaki_value(&g, &ray).unwrap();
                let want = fc.eval(&ray.b());
                assert_eq!(fut.is_negative(), want.is_negative(), "ray ({v1},{v2})");
                assert_eq!(fut.is_zero(), want.is_zero(), "ray ({v1},{v2})");
                checked += 1;
            }
        }
        assert!(checked >= 50);
    }
}
