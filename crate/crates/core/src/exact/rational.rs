//! Arbitrary-precision rationals.
//!
//! `BigRational` already keeps itself reduced with a positive denominator, and
//! its `Display`/`FromStr` use the `p/q` (or bare `n`) form we serialize with.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d`, reduced. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse(s: &str) -> Result<Rational> {
    let t = s.trim();
    let r: Rational = t.parse().map_err(|_| Error::Parse(format!("bad rational {t:?}")))?;
    Ok(r)
}

pub fn to_f64(r: &Rational) -> f64 {
    match r.to_f64() {
        Some(v) if v.is_finite() => v,
        // huge numerators and denominators: scale both down first
        _ => {
            let n = r.numer();
            let d = r.denom();
            let shift = n.bits().max(d.bits()).saturating_sub(900);
            let n = (n >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (d >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

pub fn to_json(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn from_json(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(int(i)),
            None => Err(Error::Parse(format!("non-integer JSON number {n}"))),
        },
        other => Err(Error::Parse(format!("expected rational string, got {other}"))),
    }
}

/// `Some(n)` when `r` is an integer that fits in `i64`.
pub fn as_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]` (ties broken towards smaller magnitude numerator).
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if lo.is_positive() {
        simplest_positive(lo, hi)
    } else if hi.is_negative() {
        -simplest_positive(&-hi, &-lo)
    } else {
        Rational::zero()
    }
}

// continued-fraction descent, 0 < lo <= hi
fn simplest_positive(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    if &fl == lo {
        return fl;
    }
    if fl < hi.floor() {
        return fl + Rational::one();
    }
    // same integer part, recurse on reciprocals of fractional parts
    let lo_f = lo - &fl;
    let hi_f = hi - &fl;
    if hi_f.is_zero() {
        return fl;
    }
    let inner = simplest_positive(&hi_f.recip(), &lo_f.recip());
    fl + inner.recip()
}
