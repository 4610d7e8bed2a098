//! Join parameters, Reeb rays in the w-cone, and orbifold quotient data.
//!
//! A join datum consists of the base dimension `d_N`, the normalized base
//! scalar curvature `A` (the constant scalar curvature of the base Kahler
//! form is `2 d_N A`), the join weights `(l1, l2)`, and the sphere weights
//! `(w1, w2)`. Smoothness requires `gcd(l2, w1 w2) = 1`. A ray in the
//! w-cone is a coprime pair `(v1, v2)`, written `b = v2/v1` after scaling.

use crate::ratio::{rat_int, simplest_in_open, to_pq};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum JoinError {
    #[error("out of domain: {0}")]
    OutOfDomain(String),
    #[error("invalid join parameters: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("ray components must be positive")]
    RayOutOfDomain,
    #[error("ray components must be coprime")]
    RayNotCoprime,
}

/// Validated parameters of a join manifold.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "JoinParamsRaw", into = "JoinParamsRaw")]
pub struct JoinParams {
    d_n: u32,
    a: BigRational,
    l1: u64,
    l2: u64,
    w1: u64,
    w2: u64,
}

/// Unvalidated field bundle used for construction and (de)serialization.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JoinParamsRaw {
    #[serde(rename = "dN")]
    pub d_n: u32,
    #[serde(rename = "A", with = "crate::ratio::rat_pq")]
    pub a: BigRational,
    pub l1: u64,
    pub l2: u64,
    pub w1: u64,
    pub w2: u64,
}

impl From<JoinParams> for JoinParamsRaw {
    fn from(p: JoinParams) -> Self {
        JoinParamsRaw {
            d_n: p.d_n,
            a: p.a,
            l1: p.l1,
            l2: p.l2,
            w1: p.w1,
            w2: p.w2,
        }
    }
}

impl TryFrom<JoinParamsRaw> for JoinParams {
    type Error = JoinError;
    fn try_from(raw: JoinParamsRaw) -> Result<Self, JoinError> {
        JoinParams::new(raw.d_n, raw.a, raw.l1, raw.l2, raw.w1, raw.w2)
    }
}

/// Every condition violated by the given fields, in a fixed order.
pub fn violations(d_n: u32, l1: u64, l2: u64, w1: u64, w2: u64) -> Vec<String> {
    let mut v = Vec::new();
    for (name, value) in [("dN", d_n as u64), ("l1", l1), ("l2", l2), ("w1", w1), ("w2", w2)] {
        if value == 0 {
            v.push(format!("out of domain: {name} must be positive"));
        }
    }
    if !v.is_empty() {
        return v;
    }
    if l1.gcd(&l2) != 1 {
        v.push("gcd(l1, l2) ≠ 1".to_string());
    }
    if w1.gcd(&w2) != 1 {
        v.push("gcd(w1, w2) ≠ 1".to_string());
    }
    if w1 < w2 {
        v.push("w1 ≥ w2 fails".to_string());
    }
    if l2.gcd(&(w1 * w2)) != 1 {
        v.push("gcd(l2, w1w2) ≠ 1".to_string());
    }
    v
}

impl JoinParams {
    /// Validate and construct; reports every violated condition at once.
    pub fn new(
        d_n: u32,
        a: BigRational,
        l1: u64,
        l2: u64,
        w1: u64,
        w2: u64,
    ) -> Result<Self, JoinError> {
        let v = violations(d_n, l1, l2, w1, w2);
        if !v.is_empty() {
            if v[0].starts_with("out of domain") {
                return Err(JoinError::OutOfDomain(v.join("; ")));
            }
            return Err(JoinError::Invalid(v));
        }
        Ok(JoinParams { d_n, a, l1, l2, w1, w2 })
    }

    pub fn d_n(&self) -> u32 {
        self.d_n
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn l1(&self) -> u64 {
        self.l1
    }

    pub fn l2(&self) -> u64 {
        self.l2
    }

    pub fn w1(&self) -> u64 {
        self.w1
    }

    pub fn w2(&self) -> u64 {
        self.w2
    }

    /// Same parameters, different `l2` (sweeps). Re-validates.
    pub fn with_l2(&self, l2: u64) -> Result<Self, JoinError> {
        JoinParams::new(self.d_n, self.a.clone(), self.l1, l2, self.w1, self.w2)
    }

    /// The regular value `w2/w1` where the ray is proportional to the weights.
    pub fn regular_b(&self) -> BigRational {
        BigRational::new(BigInt::from(self.w2), BigInt::from(self.w1))
    }
}

/// Base manifolds with a named scalar normalization `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseSpace {
    /// Complex projective space of the given complex dimension: `A = d_N + 1`.
    ProjectiveSpace { complex_dim: u32 },
    /// Compact Riemann surface of the given genus: `A = 2 (1 - genus)`.
    RiemannSurface { genus: u32 },
}

impl BaseSpace {
    pub fn scalar_normalization(&self) -> BigRational {
        match self {
            BaseSpace::ProjectiveSpace { complex_dim } => rat_int(*complex_dim as i64 + 1),
            BaseSpace::RiemannSurface { genus } => rat_int(2) * (rat_int(1) - rat_int(*genus as i64)),
        }
    }
}

/// A quasi-regular Reeb ray `(v1, v2)` in the w-cone, coprime components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "(u64, u64)", into = "(u64, u64)")]
pub struct RayId {
    v1: u64,
    v2: u64,
}

impl From<RayId> for (u64, u64) {
    fn from(r: RayId) -> Self {
        (r.v1, r.v2)
    }
}

impl TryFrom<(u64, u64)> for RayId {
    type Error = JoinError;
    fn try_from(v: (u64, u64)) -> Result<Self, JoinError> {
        RayId::new(v.0, v.1)
    }
}

impl RayId {
    pub fn new(v1: u64, v2: u64) -> Result<Self, JoinError> {
        if v1 == 0 || v2 == 0 {
            return Err(JoinError::RayOutOfDomain);
        }
        if v1.gcd(&v2) != 1 {
            return Err(JoinError::RayNotCoprime);
        }
        Ok(RayId { v1, v2 })
    }

    /// The canonical ray for a positive rational `b = v2/v1`.
    pub fn from_b(b: &BigRational) -> Result<Self, JoinError> {
        if !b.is_positive() {
            return Err(JoinError::RayOutOfDomain);
        }
        let v2 = b.numer().to_u64_digits().1;
        let v1 = b.denom().to_u64_digits().1;
        if v1.len() != 1 || v2.len() != 1 {
            return Err(JoinError::OutOfDomain(format!(
                "ray {} exceeds the supported denominator range",
                to_pq(b)
            )));
        }
        RayId::new(v1[0], v2[0])
    }

    /// Rational approximation of an irregular (irrational) ray: the simplest
    /// rational strictly inside `(lo, hi)` subject to a denominator bound.
    /// This is the rational-ray reduction used for all per-ray operations.
    pub fn approximate_in(
        lo: &BigRational,
        hi: &BigRational,
        max_denominator: u64,
    ) -> Option<RayId> {
        if lo >= hi || !lo.is_positive() {
            return None;
        }
        let b = simplest_in_open(lo, hi);
        if b.denom() > &BigInt::from(max_denominator) {
            return None;
        }
        RayId::from_b(&b).ok()
    }

    pub fn v1(&self) -> u64 {
        self.v1
    }

    pub fn v2(&self) -> u64 {
        self.v2
    }

    /// The scale-invariant coordinate `b = v2/v1`.
    pub fn b(&self) -> BigRational {
        BigRational::new(BigInt::from(self.v2), BigInt::from(self.v1))
    }
}

/// Orbifold quotient data of a quasi-regular ray.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuotientData {
    pub s: u64,
    pub m: u64,
    #[serde(with = "bigint_string")]
    pub m1: BigInt,
    #[serde(with = "bigint_string")]
    pub m2: BigInt,
    #[serde(with = "bigint_string")]
    pub n_deg: BigInt,
    #[serde(with = "crate::ratio::rat_pq")]
    pub r: BigRational,
    pub regular: bool,
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

/// Quotient data per the join construction:
/// `s = gcd(|w2 v1 - w1 v2|, l2)`, `m = l2/s`, `m_i = v_i m`,
/// `n_deg = l1 (w1 v2 - w2 v1)/s`, `r = (w1 v2 - w2 v1)/(w1 v2 + w2 v1)`.
/// The ray proportional to the weights is flagged `regular` (then
/// `n_deg = 0`, `r = 0`, and the extremal construction is refused).
pub fn quotient_data(params: &JoinParams, ray: &RayId) -> QuotientData {
    let w1v2 = BigInt::from(params.w1) * BigInt::from(ray.v2);
    let w2v1 = BigInt::from(params.w2) * BigInt::from(ray.v1);
    let diff = &w1v2 - &w2v1;
    let l2 = BigInt::from(params.l2);
    // gcd(0, l2) = l2 covers the regular ray.
    let s_big = diff.abs().gcd(&l2);
    let s: u64 = (&s_big).try_into().expect("s divides l2");
    let m = params.l2 / s;
    let m1 = BigInt::from(ray.v1) * m;
    let m2 = BigInt::from(ray.v2) * m;
    let n_deg = BigInt::from(params.l1) * &diff / &s_big;
    let regular = diff.is_zero();
    let r = if regular {
        BigRational::zero()
    } else {
        BigRational::new(diff, &w1v2 + &w2v1)
    };
    QuotientData { s, m, m1, m2, n_deg, r, regular }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::rat;
    use proptest::prelude::*;

    #[test]
    fn accepts_golden_parameters() {
        assert!(JoinParams::new(2, rat_int(1), 1, 29, 3, 2).is_ok());
    }

    #[test]
    fn rejects_non_coprime_smoothness() {
        let err = JoinParams::new(2, rat_int(1), 1, 4, 3, 2).unwrap_err();
        match err {
            JoinError::Invalid(v) => assert!(v.contains(&"gcd(l2, w1w2) ≠ 1".to_string())),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_unordered_weights() {
        let err = JoinParams::new(2, rat_int(1), 1, 1, 2, 3).unwrap_err();
        match err {
            JoinError::Invalid(v) => assert!(v.contains(&"w1 ≥ w2 fails".to_string())),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_zero_fields() {
        assert!(matches!(
            JoinParams::new(0, rat_int(1), 1, 1, 3, 2),
            Err(JoinError::OutOfDomain(_))
        ));
    }

    #[test]
    fn base_scalar_normalizations() {
        assert_eq!(
            BaseSpace::ProjectiveSpace { complex_dim: 2 }.scalar_normalization(),
            rat_int(3)
        );
        assert_eq!(
            BaseSpace::RiemannSurface { genus: 2 }.scalar_normalization(),
            rat_int(-2)
        );
        assert_eq!(
            BaseSpace::RiemannSurface { genus: 1 }.scalar_normalization(),
            rat_int(0)
        );
    }

    #[test]
    fn quotient_data_first_example() {
        let p = JoinParams::new(1, rat_int(-2), 1, 1, 3, 2).unwrap();
        let ray = RayId::new(1, 2).unwrap();
        let q = quotient_data(&p, &ray);
        assert_eq!(q.s, 1);
        assert_eq!(q.m, 1);
        assert_eq!(q.m1, BigInt::from(1));
        assert_eq!(q.m2, BigInt::from(2));
        assert_eq!(q.n_deg, BigInt::from(4));
        assert_eq!(q.r, rat(1, 2));
        assert!(!q.regular);
    }

    #[test]
    fn quotient_data_second_example() {
        let p = JoinParams::new(1, rat_int(-2), 1, 7, 3, 2).unwrap();
        let ray = RayId::new(2, 1).unwrap();
        let q = quotient_data(&p, &ray);
        assert_eq!(q.s, 1);
        assert_eq!(q.m, 7);
        assert_eq!(q.m1, BigInt::from(14));
        assert_eq!(q.m2, BigInt::from(7));
        assert_eq!(q.n_deg, BigInt::from(-1));
        assert_eq!(q.r, rat(-1, 7));
    }

    #[test]
    fn quotient_data_regular_ray() {
        let p = JoinParams::new(1, rat_int(-2), 1, 1, 3, 2).unwrap();
        let ray = RayId::new(3, 2).unwrap();
        let q = quotient_data(&p, &ray);
        assert!(q.regular);
        assert_eq!(q.n_deg, BigInt::from(0));
        assert_eq!(q.r, rat_int(0));
    }

    #[test]
    fn rays_must_be_coprime_and_positive() {
        assert_eq!(RayId::new(2, 2).unwrap_err(), JoinError::RayNotCoprime);
        assert_eq!(RayId::new(0, 1).unwrap_err(), JoinError::RayOutOfDomain);
        assert_eq!(RayId::from_b(&rat(4, 6)).unwrap(), RayId::new(3, 2).unwrap());
    }

    #[test]
    fn irregular_ray_approximation() {
        // Bracketing sqrt(2) with a denominator budget.
        let lo = rat(141421, 100000);
        let hi = rat(141422, 100000);
        let ray = RayId::approximate_in(&lo, &hi, 1000).unwrap();
        let b = ray.b();
        assert!(lo < b && b < hi);
        assert!(ray.v1() <= 1000);
        assert!(RayId::approximate_in(&lo, &hi, 100).is_none());
    }

    /// Massage arbitrary positive integers into a valid parameter set.
    fn canonicalize(l1: u64, mut l2: u64, w1: u64, w2: u64) -> (u64, u64, u64, u64) {
        let g = w1.gcd(&w2);
        let (mut w1, mut w2) = (w1 / g, w2 / g);
        if w1 < w2 {
            std::mem::swap(&mut w1, &mut w2);
        }
        loop {
            let g = l2.gcd(&(l1 * w1 * w2));
            if g == 1 {
                break;
            }
            l2 /= g;
        }
        (l1, l2, w1, w2)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn quotient_invariants(l1 in 1u64..=12, l2 in 1u64..=50,
                               w1 in 1u64..=20, w2 in 1u64..=20,
                               v1 in 1u64..=30, v2 in 1u64..=30) {
            let (l1, l2, w1, w2) = canonicalize(l1, l2, w1, w2);
            prop_assume!(violations(1, l1, l2, w1, w2).is_empty());
            let g = v1.gcd(&v2);
            let (v1, v2) = (v1 / g, v2 / g);
            let p = JoinParams::new(1, rat_int(-2), l1, l2, w1, w2).unwrap();
            let ray = RayId::new(v1, v2).unwrap();
            let q = quotient_data(&p, &ray);
            prop_assert_eq!(l2 % q.s, 0);
            prop_assert!(q.r > rat_int(-1) && q.r < rat_int(1));
            let diff = (w1 * v2) as i128 - (w2 * v1) as i128;
            let sign = diff.signum();
            prop_assert_eq!(q.r.is_positive() as i128 - q.r.is_negative() as i128, sign);
            let n_sign: i128 = if q.n_deg.is_positive() { 1 } else if q.n_deg.is_negative() { -1 } else { 0 };
            prop_assert_eq!(n_sign, sign);
            // b < w2/w1 iff r < 0 iff n_deg < 0.
            let b_below = ray.b() < p.regular_b();
            prop_assert_eq!(b_below, q.r.is_negative());
            // m_i = v_i * m exactly.
            prop_assert_eq!(&q.m1, &(BigInt::from(v1) * q.m));
            prop_assert_eq!(&q.m2, &(BigInt::from(v2) * q.m));
        }
    }
}
