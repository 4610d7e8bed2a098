//! Parsing, rendering, and serde support for exact rational scalars.
//!
//! Every scalar in this crate is a `num_rational::BigRational`. Inputs are
//! accepted as `"p/q"`, integer strings, or decimal strings (decimals convert
//! exactly, e.g. `"0.835"` becomes `167/200`). Outputs render either as the
//! canonical `"p/q"` form or as a fixed number of significant decimal digits.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("malformed rational '{input}': {reason}")]
pub struct RationalParseError {
    pub input: String,
    pub reason: String,
}

fn parse_err(input: &str, reason: &str) -> RationalParseError {
    RationalParseError {
        input: input.to_string(),
        reason: reason.to_string(),
    }
}

/// Parse a rational from `"p/q"`, an integer string, or a decimal string.
pub fn parse_rational(s: &str) -> Result<BigRational, RationalParseError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(parse_err(s, "empty string"));
    }
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| parse_err(s, "numerator is not an integer"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| parse_err(s, "denominator is not an integer"))?;
        if d.is_zero() {
            return Err(parse_err(s, "denominator is zero"));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_err(s, "fractional digits are not numeric"));
        }
        let (sign, int_digits) = match int_part.as_bytes().first() {
            Some(b'-') => (-1, &int_part[1..]),
            Some(b'+') => (1, &int_part[1..]),
            _ => (1, int_part),
        };
        if !int_digits.is_empty() && !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_err(s, "integer digits are not numeric"));
        }
        let int_val: BigInt = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            int_digits.parse().expect("digits checked")
        };
        let frac_val: BigInt = frac_part.parse().expect("digits checked");
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let magnitude =
            BigRational::new(int_val * &scale + frac_val, scale);
        return Ok(if sign < 0 { -magnitude } else { magnitude });
    }
    let n: BigInt = t
        .parse()
        .map_err(|_| parse_err(s, "not an integer, p/q, or decimal"))?;
    Ok(BigRational::from_integer(n))
}

/// Render a rational in the canonical `"p/q"` form, denominator always shown.
pub fn to_pq(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Render the exact value of `r` rounded to `sig` significant decimal digits.
///
/// Plain notation is used for decimal exponents in `[-3, 21]`, scientific
/// notation (`d.dd...e±k`) otherwise. Rounding is half-away-from-zero on the
/// exact rational, so the output is deterministic.
pub fn decimal_sig(r: &BigRational, sig: usize) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.numer().abs();
    let b = r.denom().clone();
    let ten = BigInt::from(10u32);
    // Compare a with b * 10^e, clearing the power to whichever side keeps
    // the exponent nonnegative.
    let below = |e: i64| -> bool {
        if e >= 0 {
            a < &b * ten.pow(e as u32)
        } else {
            &a * ten.pow((-e) as u32) < b
        }
    };
    // Find e with 10^(e-1) <= a/b < 10^e.
    let mut e = a.to_string().len() as i64 - b.to_string().len() as i64;
    while !below(e) {
        e += 1;
    }
    while below(e - 1) {
        e -= 1;
    }
    // digits = round(a * 10^(sig-e) / b), half away from zero.
    let k = sig as i64 - e;
    let (num, den) = if k >= 0 {
        (&a * ten.pow(k as u32), b)
    } else {
        (a.clone(), &b * ten.pow((-k) as u32))
    };
    let (mut q, rem) = num_integer::Integer::div_rem(&num, &den);
    if BigInt::from(2u32) * rem >= den {
        q += 1;
    }
    if q == ten.pow(sig as u32) {
        q /= &ten;
        e += 1;
    }
    let digits = q.to_string();
    debug_assert_eq!(digits.len(), sig);
    let body = if (-3..=21).contains(&e) {
        if e <= 0 {
            format!("0.{}{}", "0".repeat((-e) as usize), digits)
        } else if (e as usize) >= sig {
            format!("{}{}", digits, "0".repeat(e as usize - sig))
        } else {
            format!("{}.{}", &digits[..e as usize], &digits[e as usize..])
        }
    } else {
        format!("{}.{}e{}", &digits[..1], &digits[1..], e - 1)
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// The rational with the smallest denominator strictly inside `(lo, hi)`.
///
/// Walks the Stern-Brocot tree, which is the continued-fraction expansion of
/// the interval. Requires `lo < hi`; both endpoints may be negative.
pub fn simplest_in_open(lo: &BigRational, hi: &BigRational) -> BigRational {
    assert!(lo < hi, "simplest_in_open needs lo < hi");
    // Shift into the nonnegative range first.
    if lo.is_negative() {
        if hi.is_positive() {
            return BigRational::zero();
        }
        return -simplest_in_open(&-hi.clone(), &-lo.clone());
    }
    simplest_nonneg(lo, Some(hi))
}

/// Simplest rational in `(lo, hi)` with `lo >= 0`; `hi = None` means `+inf`.
fn simplest_nonneg(lo: &BigRational, hi: Option<&BigRational>) -> BigRational {
    let fl = lo.floor();
    let next_int = &fl + BigRational::one();
    match hi {
        None => next_int,
        Some(h) => {
            if next_int < *h {
                next_int
            } else {
                // No integer inside: recurse on the inverted fractional parts.
                let frac = lo - &fl;
                let inner = if frac.is_zero() {
                    simplest_nonneg(&(h - &fl).recip(), None)
                } else {
                    simplest_nonneg(&(h - &fl).recip(), Some(&frac.recip()))
                };
                fl + inner.recip()
            }
        }
    }
}

/// Serde adapter: (de)serialize a `BigRational` as a `"p/q"` string.
pub mod rat_pq {
    use super::{parse_rational, to_pq};
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_pq(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for `Vec<BigRational>` as `"p/q"` strings.
pub mod rat_pq_vec {
    use super::{parse_rational, to_pq};
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(to_pq))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience constructor for integers.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Exact integer power with signed exponent on nonzero rationals.
pub fn rat_pow(r: &BigRational, k: i64) -> BigRational {
    if k == 0 {
        return BigRational::one();
    }
    let p = r.pow(k.unsigned_abs() as u32 as i32);
    if k < 0 {
        p.recip()
    } else {
        p
    }
}
