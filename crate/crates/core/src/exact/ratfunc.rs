use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::Poly;
use super::rational::Rational;

/// A rational function `num / den` in one variable over ℚ, kept reduced
/// with a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFunc {
    pub num: Poly,
    pub den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_zero() || g.is_one() {
            (num, den)
        } else {
            (num.exact_quotient(&g).unwrap(), den.exact_quotient(&g).unwrap())
        };
        if num.is_zero() {
            den = Poly::one();
        }
        let lc = den.leading().unwrap().clone();
        if !lc.is_one() {
            num = num.scale(&lc.recip());
            den = den.scale(&lc.recip());
        }
        RatFunc { num, den }
    }

    pub fn poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::poly(Poly::constant(c))
    }

    /// `c / (den)^k`, the shape of a partial-fraction term.
    pub fn term(c: Poly, den: &Poly, k: u32) -> Self {
        Self::new(c, den.pow(k))
    }

    pub fn derivative(&self) -> Self {
        let num = self.num.derivative() * self.den.clone() - self.num.clone() * self.den.derivative();
        Self::new(num, self.den.clone() * self.den.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        self.num.eval_f64(t) / self.den.eval_f64(t)
    }

    /// `Some(c)` when `self − other` is the constant `c`.
    pub fn constant_offset(&self, other: &Self) -> Option<Rational> {
        let d = self.clone() - other.clone();
        if d.den.is_one() && d.num.is_constant() {
            Some(d.num.coeff(0))
        } else {
            None
        }
    }
}

impl Add for RatFunc {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if self.den == rhs.den {
            return Self::new(self.num + rhs.num, self.den);
        }
        Self::new(self.num * rhs.den.clone() + rhs.num * self.den.clone(), self.den * rhs.den)
    }
}

impl Neg for RatFunc {
    type Output = Self;

    fn neg(self) -> Self {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl Sub for RatFunc {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RatFunc {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn reduces_common_factors() {
        let r = RatFunc::new(Poly::from_ints(&[3, 4]) * Poly::from_ints(&[1, 1]), Poly::from_ints(&[3, 4]).pow(2));
        assert_eq!(r.den, Poly::from_rationals(&[(3, 4), (1, 1)]));
        assert_eq!(r.num, Poly::from_rationals(&[(1, 4), (1, 4)]));
    }

    #[test]
    fn partial_fractions_recombine() {
        // 48/(3+4η) − 288/(3+4η)² = 48(−3+4η)/(3+4η)²
        let d = Poly::from_ints(&[3, 4]);
        let a = RatFunc::term(Poly::from_ints(&[48]), &d, 1) - RatFunc::term(Poly::from_ints(&[288]), &d, 2);
        let b = RatFunc::term(Poly::from_ints(&[-144, 192]), &d, 2);
        assert_eq!(a, b);
    }

    #[test]
    fn offsets() {
        let u = RatFunc::new(Poly::from_ints(&[1]), Poly::from_ints(&[0, 1]));
        let v = u.clone() + RatFunc::constant(int(1));
        assert_eq!(v.constant_offset(&u), Some(int(1)));
        assert_eq!(v.derivative(), RatFunc::new(Poly::from_ints(&[-1]), Poly::from_ints(&[0, 0, 1])));
        assert_eq!(RatFunc::constant(rat(1, 2)).eval_f64(3.0), 0.5);
    }
}
