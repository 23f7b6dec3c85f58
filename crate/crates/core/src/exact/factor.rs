//! Partial factorization over ℚ and partial fractions.
//!
//! Factorization here is only what the rendering and residue bookkeeping
//! need: square-free decomposition, then every rational root split off as a
//! primitive linear factor. What remains of each square-free part is kept
//! whole, whether or not it is irreducible.

use num::{One, Signed, Zero};

use super::poly::Poly;
use super::rational::Rational;
use super::roots::rational_roots;
use crate::error::{Error, Result};

/// `(g, s, t)` with `s·a + t·b = g`, `g` the monic gcd.
pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Poly::one(), Poly::zero());
    let (mut t0, mut t1) = (Poly::zero(), Poly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1).expect("field division");
        r0 = std::mem::replace(&mut r1, r);
        let s = s0 - q.clone() * s1.clone();
        s0 = std::mem::replace(&mut s1, s);
        let t = t0 - q * t1.clone();
        t0 = std::mem::replace(&mut t1, t);
    }
    match r0.leading().cloned() {
        Some(l) => {
            let inv = l.recip();
            (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
        }
        None => (r0, s0, t0),
    }
}

/// Split `num / ∏ dens` into `P + Σ Nᵢ/densᵢ` with `deg Nᵢ < deg densᵢ`.
/// The denominators must be pairwise coprime.
pub fn partial_fractions(num: &Poly, dens: &[Poly]) -> Result<(Poly, Vec<Poly>)> {
    let total = dens.iter().fold(Poly::one(), |acc, d| acc * d.clone());
    let (whole, mut rest) = num.div_rem(&total)?;
    let mut parts = Vec::with_capacity(dens.len());
    for (i, d) in dens.iter().enumerate() {
        let others = dens.iter().enumerate().filter(|&(j, _)| j != i).fold(Poly::one(), |acc, (_, e)| acc * e.clone());
        let (g, inv, _) = ext_gcd(&others, d);
        if !g.is_one() {
            return Err(Error::Incompatible(format!("denominators share the factor {g}")));
        }
        let (_, ni) = (rest.clone() * inv).div_rem(d)?;
        parts.push(ni);
    }
    // the pieces must rebuild the proper part exactly
    let rebuilt = dens.iter().zip(&parts).fold(Poly::zero(), |acc, (d, n)| {
        acc + n.clone() * total.exact_quotient(d).expect("divides")
    });
    rest = rest - rebuilt;
    debug_assert!(rest.is_zero());
    Ok((whole, parts))
}

/// `c · ∏ fᵢ^{eᵢ}` with each `fᵢ` primitive (integer, content 1, positive
/// leading coefficient). Linear factors come first, by increasing root.
#[derive(Clone, Debug, PartialEq)]
pub struct Factored {
    pub constant: Rational,
    pub factors: Vec<(Poly, usize)>,
}

impl Factored {
    pub fn expand(&self) -> Poly {
        self.factors.iter().fold(Poly::constant(self.constant.clone()), |acc, (f, e)| acc * f.pow(*e as u32))
    }

    /// Render with `η^k` written as `x^{2k}`.
    pub fn render_x(&self) -> String {
        let body: String = self
            .factors
            .iter()
            .map(|(f, e)| {
                let s = format!("({})", render_x(f));
                if *e == 1 {
                    s
                } else {
                    format!("{s}{}", superscript(*e))
                }
            })
            .collect();
        if self.constant.is_one() && !body.is_empty() {
            body
        } else if (-self.constant.clone()).is_one() && !body.is_empty() {
            format!("-{body}")
        } else {
            format!("{}·{body}", self.constant)
        }
    }
}

/// Square-free decomposition (Yun): `p = lc · ∏ aᵢ^i` with monic `aᵢ`.
pub fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.exact_quotient(&a0).unwrap();
    let mut c = dp.exact_quotient(&a0).unwrap();
    let mut d = c.clone() - b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.exact_quotient(&a).unwrap();
        c = d.exact_quotient(&a).unwrap();
        d = c.clone() - b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(), i));
        }
        i += 1;
    }
    out
}

pub fn factor_rational(p: &Poly) -> Result<Factored> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut linear = Vec::new();
    let mut other = Vec::new();
    for (part, e) in squarefree_decomposition(p) {
        let mut rest = part;
        for (r, _) in rational_roots(&rest)? {
            let lin = Poly::linear_root(r).primitive();
            rest = rest.exact_quotient(&lin)?;
            linear.push((lin, e));
        }
        if rest.degree().unwrap_or(0) > 0 {
            other.push((rest.primitive(), e));
        }
    }
    // increasing root a/b of the factor b·t − a, i.e. by −c₀/c₁
    linear.sort_by_key(|(f, _)| -f.coeff(0) / f.coeff(1));
    let mut factors = linear;
    factors.extend(other);
    let expanded = factors.iter().fold(Poly::one(), |acc, (f, e)| acc * f.pow(*e as u32));
    let constant = p.leading().unwrap() / expanded.leading().unwrap();
    Ok(Factored { constant, factors })
}

/// Renders an η-polynomial in `x`, with `η^k` written as `x^{2k}`.
pub fn render_x(p: &Poly) -> String {
    let mut coeffs = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if k > 0 {
            coeffs.push(Rational::zero());
        }
        coeffs.push(c.clone());
    }
    Poly::new(coeffs).render(&["x"])
}

pub(crate) fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// Sign of the constant in front of a factored form.
pub fn is_negative(f: &Factored) -> bool {
    f.constant.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use crate::exact::RatFunc;

    #[test]
    fn bezout_identity() {
        let a = Poly::from_ints(&[3, 4]).pow(2);
        let b = Poly::from_ints(&[15, 4]);
        let (g, s, t) = ext_gcd(&a, &b);
        assert!(g.is_one());
        assert_eq!(s * a + t * b, Poly::one());
    }

    #[test]
    fn partial_fractions_of_case_e_tail() {
        // 12(η−6)/(η+6)² + 4(η−14)/(η+14)²
        let d1 = Poly::from_ints(&[6, 1]).pow(2);
        let d2 = Poly::from_ints(&[14, 1]).pow(2);
        let n1 = Poly::from_ints(&[-72, 12]);
        let n2 = Poly::from_ints(&[-56, 4]);
        let r = RatFunc::new(n1.clone(), d1.clone()) + RatFunc::new(n2.clone(), d2.clone());
        let (whole, parts) = partial_fractions(&r.num, &[d1, d2]).unwrap();
        assert!(whole.is_zero());
        assert_eq!(parts, vec![n1, n2]);
    }

    #[test]
    fn factors_the_case_g_wronskian() {
        let cubic = Poly::from_ints(&[12, 5]).pow(3);
        let quad = Poly::from_ints(&[2244, 495, 25]);
        let p = (cubic * quad.clone()).scale(&rat(1, 9375));
        let f = factor_rational(&p).unwrap();
        assert_eq!(f.constant, rat(1, 9375));
        assert_eq!(f.factors, vec![(Poly::from_ints(&[12, 5]), 3), (quad, 1)]);
        assert_eq!(f.expand(), p);
        assert_eq!(f.render_x(), "1/9375·(12 + 5·x²)³(2244 + 495·x² + 25·x⁴)");
    }

    #[test]
    fn factors_with_negative_constant() {
        let p = Poly::from_factors(&[(-14, 1, 1), (-6, 1, 3)]).scale(&int(-1));
        let f = factor_rational(&p).unwrap();
        assert_eq!(f.factors, vec![(Poly::from_ints(&[-6, 1]), 3), (Poly::from_ints(&[-14, 1]), 1)]);
        assert!(is_negative(&f));
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn yun_decomposition() {
        let p = Poly::from_factors(&[(1, 1, 1), (2, 1, 2), (3, 1, 3)]);
        let d = squarefree_decomposition(&p);
        assert_eq!(d.iter().map(|(_, e)| *e).collect::<Vec<_>>(), vec![1, 2, 3]);
    }
}
