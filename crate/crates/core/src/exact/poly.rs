//! Dense univariate polynomials over a commutative ℚ-algebra.
//!
//! `Poly` (the default parameter) is a polynomial with rational coefficients.
//! `GPoly = Poly<Poly>` is a polynomial in η whose coefficients are
//! polynomials in the coupling g.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use super::rational::{self, int, Rational};
use crate::error::{Error, Result};

/// Coefficient rings used by [`Poly`]: ℚ itself and ℚ[g]-towers over it.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    fn from_rational(r: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    fn scale(&self, c: &Rational) -> Self;

    /// `Some(c)` when `self` is the constant `c`.
    fn as_rational(&self) -> Option<Rational>;

    fn exact_div(&self, divisor: &Self) -> Result<Self>;

    /// The rational `c` with `self == c * other`, if one exists.
    fn ratio_to(&self, other: &Self) -> Option<Rational>;

    /// Human-readable form; `vars[0]` names this ring's variable.
    fn render(&self, vars: &[&str]) -> String;

    fn to_json(&self) -> Value;

    fn from_json(v: &Value) -> Result<Self>;
}

impl Coefficient for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }

    fn scale(&self, c: &Rational) -> Self {
        self * c
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self / divisor)
    }

    fn ratio_to(&self, other: &Self) -> Option<Rational> {
        if other.is_zero() {
            self.is_zero().then(Rational::zero)
        } else {
            Some(self / other)
        }
    }

    fn render(&self, _vars: &[&str]) -> String {
        self.to_string()
    }

    fn to_json(&self) -> Value {
        rational::to_json(self)
    }

    fn from_json(v: &Value) -> Result<Self> {
        rational::from_json(v)
    }
}

/// Coefficients in ascending degree; never a trailing zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<R = Rational> {
    coeffs: Vec<R>,
}

pub type GPoly = Poly<Poly>;

impl<R: Coefficient> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// `c·t^k`
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k];
        v.push(c);
        Self::new(v)
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `t - r`
    pub fn linear_root(r: R) -> Self {
        Self::new(vec![-r, R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn map<S: Coefficient>(&self, f: impl FnMut(&R) -> S) -> Poly<S> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    pub fn mul_coeff(&self, c: &R) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly { coeffs: v }
    }

    /// Number of leading zero coefficients, i.e. the power of `t` dividing
    /// `self` (0 for the zero polynomial).
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divide out `t^k`; panics unless `t^k` divides.
    pub fn unshift(&self, k: usize) -> Self {
        assert!(self.is_zero() || self.low_order() >= k, "t^{k} does not divide");
        Poly { coeffs: self.coeffs.iter().skip(k).cloned().collect() }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * R::from_int(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, t: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * t.clone() + c.clone())
    }

    /// `self(other(t))`
    pub fn compose(&self, other: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc * other.clone() + Self::constant(c.clone()))
    }

    /// `self(c·t)`; with `c = -1` this is the reflection t → −t.
    pub fn scale_var(&self, c: &Rational) -> Self {
        let mut f = Rational::one();
        let mut v = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            v.push(a.scale(&f));
            f *= c;
        }
        Self::new(v)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Quotient and remainder by a divisor whose leading coefficient divides
    /// every leading coefficient met along the way. Fails if it does not.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![R::zero(); rem.len() - dd];
        for k in (0..q.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let c = top.exact_div(dl)?;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            q[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(q), Self::new(rem)))
    }

    /// Exact polynomial division; `Error::Division` carries the remainder.
    pub fn exact_quotient(&self, d: &Self) -> Result<Self> {
        let (q, r) = match self.div_rem(d) {
            Ok(qr) => qr,
            Err(Error::Division { .. }) => {
                return Err(Error::Division { remainder: "(coefficient division failed)".into() })
            }
            Err(e) => return Err(e),
        };
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Division { remainder: r.render(&["η", "g"]) })
        }
    }

    /// `Some(c)` with `self == c·other` for a rational `c`.
    pub fn proportional_to(&self, other: &Self) -> Option<Rational> {
        if self.coeffs.len() != other.coeffs.len() {
            return None;
        }
        let mut ratio: Option<Rational> = None;
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            if b.is_zero() {
                if !a.is_zero() {
                    return None;
                }
                continue;
            }
            let r = a.ratio_to(b)?;
            match &ratio {
                None => ratio = Some(r),
                Some(prev) if *prev != r => return None,
                _ => {}
            }
        }
        Some(ratio.unwrap_or_else(Rational::zero))
    }

    /// Largest `m` with `(t - r)^m | self`.
    pub fn root_multiplicity(&self, r: &R) -> usize {
        if self.is_zero() {
            return 0;
        }
        let mut p = self.clone();
        let mut m = 0;
        while let Some((q, rem)) = p.synthetic_division(r) {
            if !rem.is_zero() {
                break;
            }
            p = q;
            m += 1;
        }
        m
    }

    /// Division by `t - r`, returning quotient and remainder.
    fn synthetic_division(&self, r: &R) -> Option<(Self, R)> {
        let n = self.coeffs.len();
        if n == 0 {
            return None;
        }
        let mut q = vec![R::zero(); n - 1];
        let mut acc = R::zero();
        for k in (0..n).rev() {
            acc = acc * r.clone() + self.coeffs[k].clone();
            if k > 0 {
                q[k - 1] = acc.clone();
            }
        }
        Some((Self::new(q), acc))
    }

    pub fn render(&self, vars: &[&str]) -> String {
        <Self as Coefficient>::render(self, vars)
    }
}

impl Poly<Rational> {
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&k| int(k)).collect())
    }

    pub fn from_rationals(c: &[(i64, i64)]) -> Self {
        Self::new(c.iter().map(|&(n, d)| rational::rat(n, d)).collect())
    }

    /// Product of `(a + b·t)^e` factors.
    pub fn from_factors(factors: &[(i64, i64, u32)]) -> Self {
        factors
            .iter()
            .fold(Self::one(), |acc, &(a, b, e)| acc * Self::from_ints(&[a, b]).pow(e))
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * t + rational::to_f64(c))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("field division");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Self::zero(),
        }
    }

    /// Scaled to integer coefficients with content 1 and positive leading
    /// coefficient.
    pub fn primitive(&self) -> Self {
        use num::Integer;
        if self.is_zero() {
            return Self::zero();
        }
        let lcm = self.coeffs.iter().fold(num::BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<num::BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let g = ints.iter().fold(num::BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().is_some_and(|c| c.is_negative()) { -1 } else { 1 };
        let scale = Rational::new(num::BigInt::from(sign), g);
        Self::new(ints.into_iter().map(|c| Rational::from_integer(c) * &scale).collect())
    }

    /// `self / gcd(self, self')`, monic.
    pub fn squarefree(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.exact_quotient(&g).expect("gcd divides").monic()
    }
}

impl GPoly {
    /// Substitute a value for the inner variable g.
    pub fn at_g(&self, g: &Rational) -> Poly {
        self.map(|c| c.eval(g))
    }

    /// Embed an η-polynomial with constant coefficients.
    pub fn lift(p: &Poly) -> Self {
        p.map(|c| Poly::constant(c.clone()))
    }

    /// Monic gcd in ℚ[g] of the η-coefficients.
    pub fn content(&self) -> Poly {
        self.coeffs.iter().fold(Poly::zero(), |acc, c| acc.gcd(c))
    }

    /// Divided by its content.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return Self::zero();
        }
        self.map(|a| a.exact_quotient(&c).expect("content divides"))
    }

    /// Partial degree in g.
    pub fn degree_g(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.degree()).max()
    }
}

impl<R: Coefficient> Coefficient for Poly<R> {
    fn from_rational(r: Rational) -> Self {
        Self::constant(R::from_rational(r))
    }

    fn scale(&self, c: &Rational) -> Self {
        self.map(|a| a.scale(c))
    }

    fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => self.coeffs[0].as_rational(),
            _ => None,
        }
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.exact_quotient(divisor)
    }

    fn ratio_to(&self, other: &Self) -> Option<Rational> {
        self.proportional_to(other)
    }

    fn render(&self, vars: &[&str]) -> String {
        let (v, rest) = match vars.split_first() {
            Some((v, rest)) => (*v, rest),
            None => ("t", &[][..]),
        };
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut s = c.render(rest);
            let compound = c.as_rational().is_none();
            let neg = !compound && s.starts_with('-');
            if neg {
                s.remove(0);
            }
            if !out.is_empty() {
                out.push_str(if neg { " - " } else { " + " });
            } else if neg {
                out.push('-');
            }
            let unit = s == "1";
            let body = if compound { format!("({s})") } else { s };
            match k {
                0 => out.push_str(&body),
                _ => {
                    if !unit {
                        out.push_str(&body);
                        out.push('·');
                    }
                    out.push_str(v);
                    if k > 1 {
                        out.push_str(&superscript(k));
                    }
                }
            }
        }
        out
    }

    fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(|c| c.to_json()).collect())
    }

    fn from_json(v: &Value) -> Result<Self> {
        match v {
            Value::Array(items) => {
                let coeffs = items.iter().map(R::from_json).collect::<Result<Vec<_>>>()?;
                let p = Self::new(coeffs);
                if p.coeffs.len() != items.len() {
                    return Err(Error::Parse("trailing zero coefficient".into()));
                }
                Ok(p)
            }
            other => Err(Error::Parse(format!("expected coefficient array, got {other}"))),
        }
    }
}

fn superscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

impl<R: Coefficient> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Coefficient> One for Poly<R> {
    fn one() -> Self {
        Poly { coeffs: vec![R::one()] }
    }
}

impl<R: Coefficient> Add for Poly<R> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a = a.clone() + b;
        }
        Self::new(long)
    }
}

impl<R: Coefficient> Neg for Poly<R> {
    type Output = Self;

    fn neg(self) -> Self {
        Poly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<R: Coefficient> Sub for Poly<R> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Coefficient> Mul for Poly<R> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<R: Coefficient> Mul<&Poly<R>> for &Poly<R> {
    type Output = Poly<R>;

    fn mul(self, rhs: &Poly<R>) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<R: Coefficient> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&["η", "g"]))
    }
}

impl<R: Coefficient> fmt::Debug for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_json())
    }
}

impl<R: Coefficient> Serialize for Poly<R> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Coefficient::to_json(self).serialize(s)
    }
}

impl<'de, R: Coefficient> Deserialize<'de> for Poly<R> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        <Self as Coefficient>::from_json(&v).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;
    use proptest::prelude::*;

    fn g() -> Poly {
        Poly::var()
    }

    #[test]
    fn square_of_linear() {
        let p = Poly::from_ints(&[3, 4]);
        assert_eq!(&p * &p, Poly::from_ints(&[9, 24, 16]));
    }

    #[test]
    fn exact_division_of_cube() {
        let p = Poly::from_ints(&[3, 4]);
        assert_eq!(p.pow(3).exact_quotient(&p).unwrap(), p.pow(2));
    }

    #[test]
    fn inexact_division_reports_remainder() {
        let err = Poly::from_ints(&[1, 0, 1]).exact_quotient(&Poly::from_ints(&[0, 1])).unwrap_err();
        assert_eq!(err, Error::Division { remainder: "1".into() });
    }

    #[test]
    fn case_a_bracket_specializes_to_cube() {
        // (1/16)(2g+1)(−9+18g+4g²−8g³ + (18−8g²)η + (12+8g)η² + 8η³) at g = 3/4
        let bracket = GPoly::new(vec![
            Poly::from_ints(&[-9, 18, 4, -8]),
            Poly::from_ints(&[18, 0, -8]),
            Poly::from_ints(&[12, 8]),
            Poly::from_ints(&[8]),
        ]);
        let pref = GPoly::constant(Poly::from_ints(&[1, 2]).scale(&rat(1, 16)));
        let w = pref * bracket;
        let at = w.at_g(&rat(3, 4));
        let expect = Poly::from_ints(&[3, 4]).pow(3).scale(&rat(5, 256));
        assert_eq!(at, expect);
        assert_eq!(expect, Poly::from_ints(&[27, 108, 144, 64]).scale(&rat(5, 256)));
    }

    #[test]
    fn multiplicities() {
        let cube = Poly::from_ints(&[3, 4]).pow(3);
        assert_eq!(cube.root_multiplicity(&rat(-3, 4)), 3);
        let e = Poly::from_ints(&[6, 1]).pow(3) * Poly::from_ints(&[14, 1]);
        assert_eq!(e.root_multiplicity(&int(-14)), 1);
        assert_eq!(e.root_multiplicity(&int(-6)), 3);
        assert_eq!(Poly::from_ints(&[1, 0, 1]).root_multiplicity(&int(0)), 0);
    }

    #[test]
    fn reflection_and_derivative() {
        let p = Poly::from_ints(&[1, 2, 3]);
        assert_eq!(p.scale_var(&int(-1)), Poly::from_ints(&[1, -2, 3]));
        assert_eq!(p.derivative(), Poly::from_ints(&[2, 6]));
        assert_eq!(p.compose(&Poly::from_ints(&[1, 1])), Poly::from_ints(&[6, 8, 3]));
    }

    #[test]
    fn proportionality_returns_constant() {
        let a = Poly::from_ints(&[3, 4]);
        assert_eq!(a.scale(&rat(-5, 256)).proportional_to(&a), Some(rat(-5, 256)));
        assert_eq!(Poly::from_ints(&[3, 5]).proportional_to(&a), None);
        let ga = GPoly::new(vec![g(), Poly::one()]);
        assert_eq!(ga.scale(&int(2)).proportional_to(&ga), Some(int(2)));
        let gb = GPoly::new(vec![g() * g(), g()]);
        assert_eq!(gb.proportional_to(&ga), None);
    }

    #[test]
    fn gpoly_content_and_primitive() {
        let bracket = GPoly::new(vec![Poly::from_ints(&[1, 1]), Poly::from_ints(&[2])]);
        let factor = Poly::from_ints(&[3, 6]);
        let w = bracket.map(|c| c * &factor);
        assert_eq!(w.content(), Poly::from_rationals(&[(1, 2), (1, 1)]));
        assert_eq!(w.primitive_part().content(), Poly::one());
    }

    #[test]
    fn rendering() {
        assert_eq!(Poly::from_ints(&[-117, 156, 208, 64]).to_string(), "-117 + 156·η + 208·η² + 64·η³");
        assert_eq!(Poly::from_ints(&[0, -1]).to_string(), "-η");
        let gp = GPoly::new(vec![Poly::from_ints(&[1, 2]), Poly::from_ints(&[-1])]);
        assert_eq!(gp.to_string(), "(1 + 2·g) - η");
    }

    #[test]
    fn json_shapes() {
        let p = Poly::from_rationals(&[(5, 256), (-3, 1)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"["5/256","-3"]"#);
        let gp = GPoly::new(vec![Poly::from_ints(&[1, 2]), Poly::from_ints(&[0, 0, 1])]);
        let s = serde_json::to_string(&gp).unwrap();
        assert_eq!(s, r#"[["1","2"],["0","0","1"]]"#);
        assert_eq!(serde_json::from_str::<GPoly>(&s).unwrap(), gp);
        assert!(serde_json::from_str::<Poly>(r#"["1","0"]"#).is_err());
    }

    #[test]
    fn primitive_integer_form() {
        let p = Poly::from_rationals(&[(-3, 8), (-1, 2)]);
        assert_eq!(p.primitive(), Poly::from_ints(&[3, 4]));
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..6)
            .prop_map(|v| Poly::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    fn small_gpoly() -> impl Strategy<Value = GPoly> {
        prop::collection::vec(small_poly(), 0..4).prop_map(GPoly::new)
    }

    proptest! {
        #[test]
        fn distributive(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a * c.clone() + b * c);
        }

        #[test]
        fn exact_div_inverts_mul(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_quotient(&b).unwrap(), a);
        }

        #[test]
        fn gpoly_exact_div_inverts_mul(a in small_gpoly(), b in small_gpoly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_quotient(&b).unwrap(), a);
        }

        #[test]
        fn json_round_trip(a in small_gpoly()) {
            let s = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<GPoly>(&s).unwrap(), a);
        }

        #[test]
        fn substitution_is_a_homomorphism(a in small_gpoly(), b in small_gpoly(), n in -9i64..9, d in 1i64..5) {
            let g0 = rat(n, d);
            prop_assert_eq!((&a * &b).at_g(&g0), &a.at_g(&g0) * &b.at_g(&g0));
        }
    }
}
