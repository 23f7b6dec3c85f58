use std::fmt;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::function::QuasiFunction;
use crate::error::{Error, Result};
use crate::exact::{int, rational, Poly, RatFunc, Rational};

/// `e^{c·x²/2} · x^p · N(η) / D(η)` over ℚ.
///
/// Canonical form: `gcd(N, D) = 1`, neither has a root at η = 0, and `D` has
/// integer coefficients with content 1 and positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalQuasi {
    expo: i64,
    #[serde(with = "rational_serde")]
    power: Rational,
    num: Poly,
    den: Poly,
}

mod rational_serde {
    use super::*;
    use serde::de::Error as _;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        rational::to_json(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        rational::from_json(&v).map_err(D::Error::custom)
    }
}

impl RationalQuasi {
    pub fn new(expo: i64, power: Rational, num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalQuasi { expo: 0, power: Rational::zero(), num, den: Poly::one() });
        }
        let g = num.gcd(&den);
        let (num, den) = (num.exact_quotient(&g)?, den.exact_quotient(&g)?);
        let (kn, kd) = (num.low_order(), den.low_order());
        let power = power + int(2 * (kn as i64 - kd as i64));
        let (num, den) = (num.unshift(kn), den.unshift(kd));
        let prim = den.primitive();
        let c = prim.leading().unwrap() / den.leading().unwrap();
        Ok(RationalQuasi { expo, power, num: num.scale(&c), den: prim })
    }

    pub fn from_quasi(f: &QuasiFunction) -> Self {
        Self::new(f.expo(), f.power().clone(), f.poly().clone(), Poly::one()).expect("unit denominator")
    }

    /// `a / b`.
    pub fn quotient(a: &QuasiFunction, b: &QuasiFunction) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(a.expo() - b.expo(), a.power() - b.power(), a.poly().clone(), b.poly().clone())
    }

    pub fn expo(&self) -> i64 {
        self.expo
    }

    pub fn power(&self) -> &Rational {
        &self.power
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.expo, self.power.clone(), self.num.scale(c), self.den.clone()).unwrap()
    }

    /// `f′/f = R(η)/x`; returns `R = cη + p + 2η(N′/N − D′/D)`.
    pub fn log_derivative_eta(&self) -> RatFunc {
        assert!(!self.is_zero(), "log-derivative of zero");
        let two_eta = |p: &Poly| p.derivative().shift(1).scale(&int(2));
        RatFunc::poly(Poly::new(vec![self.power.clone(), int(self.expo)]))
            + RatFunc::new(two_eta(&self.num), self.num.clone())
            - RatFunc::new(two_eta(&self.den), self.den.clone())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let eta = x * x;
        (self.expo as f64 * eta / 2.0).exp() * x.powf(rational::to_f64(&self.power)) * self.num.eval_f64(eta)
            / self.den.eval_f64(eta)
    }

    /// `Some(c)` with `self == c · other`.
    pub fn proportional_to(&self, other: &Self) -> Option<Rational> {
        if self.expo != other.expo || self.power != other.power || self.den != other.den {
            return None;
        }
        self.num.proportional_to(&other.num)
    }

    /// The numerator rescaled to integer coefficients with content 1 and a
    /// positive leading coefficient, together with the constant removed.
    pub fn normalized_num(&self) -> (Poly, Rational) {
        let p = self.num.primitive();
        let c = self.num.leading().map(|l| l / p.leading().unwrap()).unwrap_or_else(Rational::zero);
        (p, c)
    }
}

impl fmt::Display for RationalQuasi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pre = QuasiFunction::new(self.expo, self.power.clone(), Poly::one());
        let pre = pre.to_string();
        let pre = pre.trim_end_matches("·(1)").trim_end_matches("(1)");
        if !pre.is_empty() {
            write!(f, "{pre}·")?;
        }
        write!(f, "({})", self.num)?;
        if !self.den.is_one() {
            write!(f, " / ({})", self.den)?;
        }
        Ok(())
    }
}

/// `(log f)″` for `f′/f = R/x`, namely `2R′ − R/η`.
pub fn second_log_derivative(r: &RatFunc) -> RatFunc {
    r.derivative().scale(&int(2)) - over_eta(r)
}

/// `(w′)² + w″` for `w′ = R/x`: `(R² − R)/η + 2R′`.
pub fn riccati_sum(r: &RatFunc) -> RatFunc {
    over_eta(&(r.clone() * r.clone() - r.clone())) + r.derivative().scale(&int(2))
}

/// `(w′)² − w″` for `w′ = R/x`: `(R² + R)/η − 2R′`.
pub fn riccati_difference(r: &RatFunc) -> RatFunc {
    over_eta(&(r.clone() * r.clone() + r.clone())) - r.derivative().scale(&int(2))
}

fn over_eta(r: &RatFunc) -> RatFunc {
    r.clone() * RatFunc::new(Poly::one(), Poly::var())
}

/// `(−f″ + (U − E) f) / f` as a rational function of η, for `f′/f = R/x`.
pub fn schrodinger_defect(u: &RatFunc, e: &Rational, r: &RatFunc) -> RatFunc {
    u.clone() - RatFunc::constant(e.clone()) - riccati_sum(r)
}

/// Sign of the numerator's leading coefficient, used to orient printed forms.
pub fn leading_sign(p: &Poly) -> i32 {
    match p.leading() {
        Some(c) if c.is_negative() => -1,
        Some(_) => 1,
        None => 0,
    }
}
