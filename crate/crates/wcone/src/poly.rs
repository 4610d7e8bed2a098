//! Exact univariate polynomial algebra over arbitrary-precision rationals.
//!
//! `UniPoly` is a dense polynomial with `BigRational` coefficients stored by
//! ascending degree; the zero polynomial is the empty coefficient sequence.
//! `RationalFn` is a reduced ratio of two polynomials in a canonical form.
//! All arithmetic is exact; nothing here touches floating point.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("not isolating: {0}")]
    NotIsolating(String),
}

/// Dense univariate polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly { coeffs }
    }

    /// The identity polynomial `x`.
    pub fn var() -> Self {
        UniPoly::monomial(BigRational::one(), 1)
    }

    /// Convenience: ascending integer coefficients.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        UniPoly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero when `k` exceeds the degree).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `p(x)` computed over the integers (clears all denominators,
    /// avoiding rational reduction on every Horner step).
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let p = x.numer();
        let q = x.denom();
        // Common denominator of all coefficients.
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        // sum_i c_i p^i q^(n-i), evaluated by reverse Horner in p.
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            let int_c = c.numer() * (&lcm / c.denom());
            acc = acc * p + int_c * &qpow;
            if i > 0 {
                qpow *= q;
            }
        }
        match acc.sign() {
            num_bigint::Sign::Minus => -1,
            num_bigint::Sign::NoSign => 0,
            num_bigint::Sign::Plus => 1,
        }
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / BigRational::from_integer(BigInt::from(i + 1))),
        );
        UniPoly::new(coeffs)
    }

    pub fn scaled(&self, c: &BigRational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact Euclidean division: `self = q*d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly), AlgebraError> {
        if d.is_zero() {
            return Err(AlgebraError::ZeroDivisor);
        }
        let dd = d.degree().expect("nonzero divisor");
        let lead = d.leading().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().expect("nonempty") / lead;
            for i in 0..=dd {
                let t = &factor * &d.coeffs[i];
                rem[k + i] -= t;
            }
            debug_assert!(rem.last().expect("nonempty").is_zero());
            rem.pop();
            while rem.len() > dd && rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
            quot[k] = factor;
        }
        Ok((UniPoly::new(quot), UniPoly::new(rem)))
    }

    /// Largest `k` with `(x - r)^k` dividing `self`, by repeated division.
    pub fn root_multiplicity(&self, r: &BigRational) -> Result<u32, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let linear = UniPoly::new(vec![-r.clone(), BigRational::one()]);
        let mut k = 0;
        let mut cur = self.clone();
        loop {
            let (q, rem) = cur.divrem(&linear).expect("linear divisor");
            if rem.is_zero() {
                k += 1;
                cur = q;
            } else {
                return Ok(k);
            }
        }
    }

    /// Monic normalization; zero stays zero.
    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lc) => self.scaled(&lc.recip()),
        }
    }

    /// Monic gcd by the Euclidean algorithm; `gcd(0, 0) = 0`.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let r = x.divrem(&y).expect("nonzero divisor").1;
            x = y;
            y = r.monic();
        }
        x.monic()
    }

    /// `self / gcd(self, self')`: same distinct roots, all simple.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let g = UniPoly::gcd(self, &self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        self.divrem(&g).expect("nonzero gcd").0.monic()
    }

    /// Yun's squarefree decomposition: pairwise-coprime monic factors
    /// `(m, f)` with `self = c * prod f^m` and each `f` squarefree.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(u32, UniPoly)>, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroPolynomial);
        }
        let mut out = Vec::new();
        if self.degree() == Some(0) {
            return Ok(out);
        }
        let dp = self.derivative();
        let a = UniPoly::gcd(self, &dp);
        if a.degree() == Some(0) {
            out.push((1, self.monic()));
            return Ok(out);
        }
        let mut b = self.divrem(&a).expect("nonzero gcd").0;
        let c = dp.divrem(&a).expect("nonzero gcd").0;
        let mut d = &c - &b.derivative();
        let mut mult = 1u32;
        while b.degree().unwrap_or(0) >= 1 {
            let f = UniPoly::gcd(&b, &d);
            if f.degree().unwrap_or(0) >= 1 {
                out.push((mult, f.clone()));
            }
            b = b.divrem(&f).expect("nonzero gcd").0;
            let c_next = d.divrem(&f).expect("nonzero gcd").0;
            d = &c_next - &b.derivative();
            mult += 1;
        }
        Ok(out)
    }

    /// Primitive integer coefficients with the same roots (content removed).
    pub fn primitive_int_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        ints.into_iter().map(|v| v / &g).collect()
    }

    /// Coefficients rendered as `"p/q"` strings, ascending.
    pub fn to_pq_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(crate::ratio::to_pq).collect()
    }

    /// Human-readable rendering in the named variable, descending powers.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let coeff_str = if mag.is_one() && k > 0 {
                String::new()
            } else if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            let var_str = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let body = match (coeff_str.is_empty(), var_str.is_empty()) {
                (true, _) => var_str.clone(),
                (false, true) => coeff_str.clone(),
                (false, false) => format!("{coeff_str}*{var_str}"),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() {
                    format!("-{body}")
                } else {
                    body
                });
            } else {
                parts.push(format!(
                    " {} {body}",
                    if c.is_negative() { "-" } else { "+" }
                ));
            }
        }
        parts.concat()
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly[{}]", self.display_in("x"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::new(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::new(coeffs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::new(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Reduced ratio of polynomials. Canonical form: numerator and denominator
/// coprime, denominator primitive over the integers with positive leading
/// coefficient (so equal functions compare equal coefficient-for-coefficient).
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFn {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(RationalFn {
                num: UniPoly::zero(),
                den: UniPoly::one(),
            });
        }
        let g = UniPoly::gcd(&num, &den);
        let (num, den) = if g.degree().unwrap_or(0) >= 1 {
            (
                num.divrem(&g).expect("nonzero gcd").0,
                den.divrem(&g).expect("nonzero gcd").0,
            )
        } else {
            (num, den)
        };
        // Scale so the denominator is integer-primitive with positive lead.
        let prim = UniPoly::new(
            den.primitive_int_coeffs()
                .into_iter()
                .map(BigRational::from_integer)
                .collect(),
        );
        let prim = if prim.leading().expect("nonzero").is_negative() {
            (&prim).neg()
        } else {
            prim
        };
        // den = c * prim with c rational; divide the numerator by c.
        let c = den.leading().expect("nonzero") / prim.leading().expect("nonzero");
        Ok(RationalFn {
            num: num.scaled(&c.recip()),
            den: prim,
        })
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact value; `None` at a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Exact sign away from poles; `None` at a pole.
    pub fn sign_at(&self, x: &BigRational) -> Option<i32> {
        let d = self.den.sign_at(x);
        if d == 0 {
            return None;
        }
        Some(self.num.sign_at(x) * d)
    }

    /// Quotient-rule derivative, reduced.
    pub fn derivative(&self) -> RationalFn {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        RationalFn::new(num, den).expect("nonzero denominator")
    }

    /// Valuation at 0 (negative = pole order) and the leading coefficient of
    /// the Laurent expansion there.
    pub fn valuation_at_zero(&self) -> (i64, BigRational) {
        let ord = |p: &UniPoly| p.coeffs.iter().take_while(|c| c.is_zero()).count();
        let on = ord(&self.num);
        let od = ord(&self.den);
        let lead = self.num.coeff(on) / self.den.coeff(od);
        (on as i64 - od as i64, lead)
    }

    /// Degree of growth at infinity and the coefficient ratio there.
    pub fn degree_at_infinity(&self) -> (i64, BigRational) {
        let dn = self.num.degree().expect("nonzero numerator") as i64;
        let dd = self.den.degree().expect("nonzero denominator") as i64;
        let lead = self.num.leading().expect("nonzero") / self.den.leading().expect("nonzero");
        (dn - dd, lead)
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RationalFn[({}) / ({})]",
            self.num.display_in("x"),
            self.den.display_in("x")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{rat, rat_int};
    use proptest::prelude::*;

    fn poly(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_int_coeffs(coeffs)
    }

    #[test]
    fn divrem_factorization_identity() {
        // (b^2 - 1) / (b - 1) = (b + 1, 0)
        let (q, r) = poly(&[-1, 0, 1]).divrem(&poly(&[-1, 1])).unwrap();
        assert_eq!(q, poly(&[1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn divrem_remainder_theorem() {
        // (b^2 + 1) / (b - 1) = (b + 1, 2)
        let (q, r) = poly(&[1, 0, 1]).divrem(&poly(&[-1, 1])).unwrap();
        assert_eq!(q, poly(&[1, 1]));
        assert_eq!(r, poly(&[2]));
    }

    #[test]
    fn divrem_rejects_zero_divisor() {
        assert_eq!(
            poly(&[1, 1]).divrem(&UniPoly::zero()).unwrap_err(),
            AlgebraError::ZeroDivisor
        );
    }

    #[test]
    fn root_multiplicity_examples() {
        // (3b - 2)^2 at 2/3 -> 2
        let sq = &poly(&[-2, 3]) * &poly(&[-2, 3]);
        assert_eq!(sq.root_multiplicity(&rat(2, 3)).unwrap(), 2);
        // ((3b - 2)^2)^3 at 2/3 -> 6
        assert_eq!(sq.pow(3).root_multiplicity(&rat(2, 3)).unwrap(), 6);
        // b^2 + 1 at 1 -> 0
        assert_eq!(poly(&[1, 0, 1]).root_multiplicity(&rat_int(1)).unwrap(), 0);
        assert!(UniPoly::zero().root_multiplicity(&rat_int(1)).is_err());
    }

    #[test]
    fn yun_decomposition_splits_multiplicities() {
        // (x - 1)(x - 2)^2
        let p = &poly(&[-1, 1]) * &(&poly(&[-2, 1]) * &poly(&[-2, 1]));
        let parts = p.squarefree_decomposition().unwrap();
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0], (1, poly(&[-1, 1])));
        assert_eq!(parts[1], (2, poly(&[-2, 1])));
    }

    #[test]
    fn sign_at_matches_eval() {
        let p = poly(&[-48, 88, 720, -1242, -459, 243]);
        for x in [rat(1, 3), rat(2, 3), rat_int(10), rat(-7, 5)] {
            let s = p.eval(&x);
            let expected = if s.is_zero() {
                0
            } else if s.is_negative() {
                -1
            } else {
                1
            };
            assert_eq!(p.sign_at(&x), expected);
        }
        assert_eq!(poly(&[-2, 3]).sign_at(&rat(2, 3)), 0);
    }

    #[test]
    fn rational_fn_reduces_to_canonical_form() {
        // (x^2 - 1) / (2x - 2) reduces to (x + 1) / 2.
        let f = RationalFn::new(poly(&[-1, 0, 1]), poly(&[-2, 2])).unwrap();
        assert_eq!(f.den(), &poly(&[1]));
        assert_eq!(f.num(), &UniPoly::new(vec![rat(1, 2), rat(1, 2)]));
        // Scalar multiples collapse to the same canonical pair.
        let g = RationalFn::new(poly(&[-3, 0, 3]), poly(&[-6, 6])).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn rational_fn_valuations() {
        // (x^2 + 1) / x^3: pole order 3 at 0, degree -1 at infinity.
        let f = RationalFn::new(poly(&[1, 0, 1]), poly(&[0, 0, 0, 1])).unwrap();
        let (v0, c0) = f.valuation_at_zero();
        assert_eq!(v0, -3);
        assert_eq!(c0, rat_int(1));
        let (di, ci) = f.degree_at_infinity();
        assert_eq!(di, -1);
        assert_eq!(ci, rat_int(1));
    }

    #[test]
    fn quotient_rule_derivative() {
        // d/dx (x / (x + 1)) = 1 / (x + 1)^2
        let f = RationalFn::new(poly(&[0, 1]), poly(&[1, 1])).unwrap();
        let df = f.derivative();
        assert_eq!(df.num(), &poly(&[1]));
        assert_eq!(df.den(), &poly(&[1, 2, 1]));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn divrem_reconstructs(p in proptest::collection::vec(-100i64..=100, 0..=9),
                               d in proptest::collection::vec(-100i64..=100, 1..=9)) {
            let p = UniPoly::from_int_coeffs(&p);
            let d = UniPoly::from_int_coeffs(&d);
            prop_assume!(!d.is_zero());
            let (q, r) = p.divrem(&d).unwrap();
            prop_assert_eq!(&(&(&q * &d) + &r), &p);
            if !r.is_zero() {
                prop_assert!(r.degree().unwrap() < d.degree().unwrap());
            }
        }

        #[test]
        fn gcd_divides_both(a in proptest::collection::vec(-20i64..=20, 1..=6),
                            b in proptest::collection::vec(-20i64..=20, 1..=6)) {
            let a = UniPoly::from_int_coeffs(&a);
            let b = UniPoly::from_int_coeffs(&b);
            prop_assume!(!a.is_zero() && !b.is_zero());
            let g = UniPoly::gcd(&a, &b);
            prop_assert!(a.divrem(&g).unwrap().1.is_zero());
            prop_assert!(b.divrem(&g).unwrap().1.is_zero());
        }
    }
}
