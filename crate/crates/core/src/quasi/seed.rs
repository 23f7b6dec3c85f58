use std::fmt;
use std::str::FromStr;

use num::One;
use serde::{Deserialize, Serialize};

use super::function::QuasiFunction;
use crate::error::{Error, Result};
use crate::exact::{int, rat, Coefficient, Poly, RatFunc, Rational};

/// `L_n^{(α)}(η)` by the three-term recurrence, valid for every α.
pub fn laguerre<R: Coefficient>(n: usize, alpha: &R) -> Poly<R> {
    let one = Poly::<R>::one();
    if n == 0 {
        return one;
    }
    let eta = Poly::<R>::var();
    let mut prev = one.clone();
    let mut cur = Poly::constant(R::one() + alpha.clone()) - eta.clone();
    for k in 1..n {
        let a = Poly::constant(R::from_int(2 * k as i64 + 1) + alpha.clone()) - eta.clone();
        let b = R::from_int(k as i64) + alpha.clone();
        let next = (a * cur.clone() - prev.mul_coeff(&b)).scale(&rat(1, k as i64 + 1));
        prev = cur;
        cur = next;
    }
    cur
}

fn half<R: Coefficient>() -> R {
    R::from_rational(rat(1, 2))
}

/// `φ_n = e^{−x²/2} x^g L_n^{(g−1/2)}(η)`; energy `4n`.
pub fn eigenfunction<R: Coefficient>(n: usize, g: &R) -> QuasiFunction<R> {
    QuasiFunction::new(-1, g.clone(), laguerre(n, &(g.clone() - half())))
}

pub fn eigen_energy(n: i64) -> Rational {
    int(4 * n)
}

/// `U(x;g) = x² + g(g−1)/x² − (1+2g)` as a rational function of `η = x²`.
pub fn oscillator_potential(g: &Rational) -> RatFunc {
    let num = Poly::new(vec![g * (g - int(1)), -(int(1) + g * int(2)), int(1)]);
    RatFunc::new(num, Poly::var())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SeedKind {
    I,
    II,
    III,
}

impl fmt::Display for SeedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeedKind::I => "I",
            SeedKind::II => "II",
            SeedKind::III => "III",
        })
    }
}

impl FromStr for SeedKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "I" => Ok(SeedKind::I),
            "II" => Ok(SeedKind::II),
            "III" => Ok(SeedKind::III),
            other => Err(Error::Parse(format!("unknown seed kind {other:?}"))),
        }
    }
}

/// A seed label such as `II_1`. The coupling is supplied separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SeedSpec {
    pub kind: SeedKind,
    pub v: usize,
}

impl SeedSpec {
    pub const fn new(kind: SeedKind, v: usize) -> Self {
        SeedSpec { kind, v }
    }

    pub fn solution<R: Coefficient>(&self, g: &R) -> QuasiFunction<R> {
        seed_solution(*self, g)
    }

    pub fn energy<R: Coefficient>(&self, g: &R) -> R {
        seed_energy(*self, g)
    }
}

impl fmt::Display for SeedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.kind, self.v)
    }
}

impl FromStr for SeedSpec {
    type Err = Error;

    /// Accepts `II_1` or `II1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let split = s.find(|c: char| c.is_ascii_digit()).ok_or_else(|| Error::Parse(format!("bad seed {s:?}")))?;
        let kind = s[..split].trim_end_matches('_').parse()?;
        let v = s[split..].parse().map_err(|_| Error::Parse(format!("bad seed degree in {s:?}")))?;
        Ok(SeedSpec { kind, v })
    }
}

pub fn seed_solution<R: Coefficient>(s: SeedSpec, g: &R) -> QuasiFunction<R> {
    let one_minus_g = R::one() - g.clone();
    match s.kind {
        SeedKind::I => {
            let p = laguerre(s.v, &(g.clone() - half())).scale_var(&int(-1));
            QuasiFunction::new(1, g.clone(), p)
        }
        SeedKind::II => {
            let p = laguerre(s.v, &(half::<R>() - g.clone()));
            QuasiFunction::new(-1, one_minus_g, p)
        }
        SeedKind::III => {
            let p = laguerre(s.v, &(half::<R>() - g.clone())).scale_var(&int(-1));
            QuasiFunction::new(1, one_minus_g, p)
        }
    }
}

pub fn seed_energy<R: Coefficient>(s: SeedSpec, g: &R) -> R {
    let v = R::from_int(s.v as i64);
    let e = match s.kind {
        SeedKind::I => g.clone() + v + half(),
        SeedKind::II => g.clone() - v - half(),
        SeedKind::III => v + R::one(),
    };
    e.scale(&int(-4))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GPoly;
    use num::Zero;

    // Independent closed form: Σ_k (−1)^k C(n+α, n−k) η^k / k!
    fn laguerre_sum(n: usize, alpha: &Rational) -> Poly {
        let mut coeffs = Vec::new();
        for k in 0..=n {
            let mut binom = int(1);
            for j in 0..(n - k) {
                binom = binom * (alpha + int((k + j + 1) as i64)) / int((j + 1) as i64);
            }
            let mut fact = int(1);
            for j in 1..=k {
                fact *= int(j as i64);
            }
            let sign = if k % 2 == 0 { int(1) } else { int(-1) };
            coeffs.push(sign * binom / fact);
        }
        Poly::new(coeffs)
    }

    #[test]
    fn low_laguerre() {
        let a = rat(1, 4);
        assert_eq!(laguerre(0, &a), Poly::from_ints(&[1]));
        assert_eq!(laguerre(1, &a), Poly::from_rationals(&[(5, 4), (-1, 1)]));
        assert_eq!(laguerre(2, &a), Poly::from_rationals(&[(45, 32), (-9, 4), (1, 2)]));
    }

    #[test]
    fn laguerre_matches_sum_and_ode() {
        for alpha in [rat(1, 4), rat(-7, 1), rat(-1, 2), int(7), rat(13, 3)] {
            for n in 0..8 {
                let l = laguerre(n, &alpha);
                assert_eq!(l, laguerre_sum(n, &alpha), "n={n} α={alpha}");
                let ode = l.derivative().derivative().shift(1)
                    + Poly::new(vec![&alpha + int(1), int(-1)]) * l.derivative()
                    + l.scale(&int(n as i64));
                assert!(ode.is_zero());
            }
        }
    }

    #[test]
    fn symbolic_laguerre_specializes() {
        let alpha = Poly::from_rationals(&[(-1, 2), (1, 1)]);
        let l: GPoly = laguerre(3, &alpha);
        assert_eq!(l.at_g(&rat(3, 4)), laguerre(3, &rat(1, 4)));
    }

    #[test]
    fn seeds_from_the_examples() {
        let f = seed_solution(SeedSpec::new(SeedKind::I, 1), &rat(1, 4));
        assert_eq!(f, QuasiFunction::new(1, rat(1, 4), Poly::from_rationals(&[(3, 4), (1, 1)])));
        let f = seed_solution(SeedSpec::new(SeedKind::II, 1), &rat(15, 2));
        assert_eq!(f, QuasiFunction::new(-1, rat(-13, 2), Poly::from_ints(&[-6, -1])));
        let e = eigenfunction(1, &rat(3, 4));
        assert_eq!(e, QuasiFunction::new(-1, rat(3, 4), Poly::from_rationals(&[(5, 4), (-1, 1)])));
    }

    #[test]
    fn seed_energies() {
        let g = rat(53, 2);
        let s = |k, v| SeedSpec::new(k, v).energy(&g);
        assert_eq!(s(SeedKind::I, 1), int(-112));
        assert_eq!(s(SeedKind::II, 1), int(-100));
        assert_eq!(s(SeedKind::II, 2), int(-96));
        assert_eq!(s(SeedKind::III, 2), int(-12));
    }

    #[test]
    fn seed_labels_parse() {
        assert_eq!("II_1".parse::<SeedSpec>().unwrap(), SeedSpec::new(SeedKind::II, 1));
        assert_eq!("III2".parse::<SeedSpec>().unwrap(), SeedSpec::new(SeedKind::III, 2));
        assert!("IV1".parse::<SeedSpec>().is_err());
        assert_eq!(SeedSpec::new(SeedKind::I, 3).to_string(), "I_3");
    }

    #[test]
    fn base_potential_shape() {
        let u = oscillator_potential(&rat(3, 4));
        assert_eq!(u.eval_f64(1.0), 1.0 - 3.0 / 16.0 - 2.5);
        assert_eq!(u.constant_offset(&oscillator_potential(&rat(1, 4))), Some(int(-1)));
    }
}
