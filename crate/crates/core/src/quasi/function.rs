use std::fmt;

use num::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{rational, Coefficient, Poly, RatFunc, Rational};

/// `e^{c·x²/2} · x^p · P(η)` with `η = x²`.
///
/// The coefficient ring `R` is ℚ for a fixed coupling, or ℚ[g] when the
/// coupling is kept symbolic; then `p` is a polynomial in g as well.
///
/// Canonical form: `P` has a nonzero constant term, with any `η^k` factor
/// moved into the power as `p + 2k`. The zero function is `(0, 0, 0)`.
#[derive(Clone, PartialEq, Debug)]
pub struct QuasiFunction<R: Coefficient = Rational> {
    expo: i64,
    power: R,
    poly: Poly<R>,
}

impl<R: Coefficient> QuasiFunction<R> {
    pub fn new(expo: i64, power: R, poly: Poly<R>) -> Self {
        if poly.is_zero() {
            return Self::zero();
        }
        let k = poly.low_order();
        QuasiFunction { expo, power: power + R::from_int(2 * k as i64), poly: poly.unshift(k) }
    }

    pub fn zero() -> Self {
        QuasiFunction { expo: 0, power: R::zero(), poly: Poly::zero() }
    }

    /// Pure polynomial `P(η)`.
    pub fn from_poly(poly: Poly<R>) -> Self {
        Self::new(0, R::zero(), poly)
    }

    pub fn expo(&self) -> i64 {
        self.expo
    }

    pub fn power(&self) -> &R {
        &self.power
    }

    pub fn poly(&self) -> &Poly<R> {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// `(c, p, P) → (c, p−1, (cη + p)·P + 2η·P′)`, without canonicalizing.
    pub(crate) fn raw_derivative_parts(expo: i64, power: &R, poly: &Poly<R>) -> Poly<R> {
        let linear = Poly::new(vec![power.clone(), R::from_int(expo)]);
        linear * poly.clone() + poly.derivative().shift(1).scale(&rational::int(2))
    }

    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let poly = Self::raw_derivative_parts(self.expo, &self.power, &self.poly);
        Self::new(self.expo, self.power.clone() - R::one(), poly)
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |f, _| f.derivative())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            self.expo + other.expo,
            self.power.clone() + other.power.clone(),
            &self.poly * &other.poly,
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.expo, self.power.clone(), self.poly.scale(c))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.expo, self.power.clone(), -self.poly.clone())
    }

    /// Sum of two functions whose prefactors differ by an even power of x.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let incompatible = || Error::Incompatible(format!("{self} and {other}"));
        if self.expo != other.expo {
            return Err(incompatible());
        }
        let diff = (self.power.clone() - other.power.clone()).as_rational().ok_or_else(incompatible)?;
        let half = rational::as_i64(&(diff / rational::int(2))).ok_or_else(incompatible)?;
        let (low, high, k) = if half >= 0 { (other, self, half) } else { (self, other, -half) };
        let poly = low.poly.clone() + high.poly.shift(k as usize);
        Ok(Self::new(self.expo, low.power.clone(), poly))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// `Some(c)` with `self == c · other`.
    pub fn proportional_to(&self, other: &Self) -> Option<Rational> {
        if other.is_zero() {
            return self.is_zero().then(Rational::zero);
        }
        if self.expo != other.expo || self.power != other.power {
            return None;
        }
        self.poly.proportional_to(&other.poly)
    }

    pub fn map<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> QuasiFunction<S> {
        QuasiFunction::new(self.expo, f(&self.power), self.poly.map(&f))
    }
}

impl QuasiFunction<Rational> {
    /// `f′/f = R(η)/x` with `R = cη + p + 2η·P′/P`.
    pub fn log_derivative_eta(&self) -> RatFunc {
        assert!(!self.is_zero(), "log-derivative of zero");
        let lin = RatFunc::poly(Poly::new(vec![self.power.clone(), rational::int(self.expo)]));
        lin + RatFunc::new(self.poly.derivative().shift(1).scale(&rational::int(2)), self.poly.clone())
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let p = rational::to_f64(&self.power);
        (self.expo as f64 * x * x / 2.0).exp() * x.powf(p) * self.poly.eval_f64(x * x)
    }
}

impl QuasiFunction<Poly> {
    /// Substitute a value for the symbolic coupling.
    pub fn at_g(&self, g: &Rational) -> QuasiFunction {
        QuasiFunction::new(self.expo, self.power.eval(g), self.poly.at_g(g))
    }

    pub fn lift(f: &QuasiFunction) -> Self {
        f.map(|c| Poly::constant(c.clone()))
    }
}

impl<R: Coefficient> fmt::Display for QuasiFunction<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.expo {
            0 => {}
            1 => parts.push("e^{x²/2}".to_string()),
            -1 => parts.push("e^{-x²/2}".to_string()),
            2 => parts.push("e^{x²}".to_string()),
            c if c % 2 == 0 => parts.push(format!("e^{{{}x²}}", c / 2)),
            c => parts.push(format!("e^{{{c}x²/2}}")),
        }
        if !self.power.is_zero() {
            parts.push(format!("x^{{{}}}", self.power.render(&["g"])));
        }
        parts.push(format!("({})", self.poly.render(&["η", "g"])));
        f.write_str(&parts.join("·"))
    }
}

impl<R: Coefficient> QuasiFunction<R> {
    pub fn to_json(&self) -> Value {
        json!({
            "expo": self.expo,
            "power": self.power.to_json(),
            "poly": Coefficient::to_json(&self.poly),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("missing field {k}")));
        let expo = field("expo")?.as_i64().ok_or_else(|| Error::Parse("expo must be an integer".into()))?;
        let power = R::from_json(field("power")?)?;
        let poly = <Poly<R> as Coefficient>::from_json(field("poly")?)?;
        let raw = QuasiFunction { expo, power: power.clone(), poly: poly.clone() };
        let f = Self::new(expo, power, poly);
        if f != raw {
            return Err(Error::Parse("quasi-function is not in canonical form".into()));
        }
        Ok(f)
    }
}

impl<R: Coefficient> Serialize for QuasiFunction<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de, R: Coefficient> Deserialize<'de> for QuasiFunction<R> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        Self::from_json(&v).map_err(D::Error::custom)
    }
}
