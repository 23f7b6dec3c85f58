//! Rational roots and real-root counting for polynomials over ℚ.
//!
//! Rational roots are found without factoring the constant and leading
//! coefficients: the square-free part is cleared to integer coefficients,
//! its real roots are isolated by Sturm sequences, and each isolating interval
//! is narrowed until it can hold at most one fraction whose denominator
//! divides the leading coefficient. The simplest fraction in the interval is
//! then the only rational-root candidate and is checked exactly.

use num::{BigInt, Integer, One, Signed, Zero};

use super::poly::Poly;
use super::rational::{simplest_between, Rational};
use crate::error::{Error, Result};

pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("field division");
        if r.is_zero() {
            break;
        }
        seq.push(-r);
    }
    seq
}

/// A point on the extended real line.
#[derive(Debug, Clone, PartialEq)]
pub enum Point {
    NegInf,
    At(Rational),
    PosInf,
}

fn sign_at(p: &Poly, x: &Point) -> i32 {
    let Some(d) = p.degree() else { return 0 };
    let lc = p.leading().unwrap();
    let s = match x {
        Point::At(v) => p.eval(v).signum(),
        Point::PosInf => lc.signum(),
        Point::NegInf => {
            if d % 2 == 0 {
                lc.signum()
            } else {
                -lc.signum()
            }
        }
    };
    if s.is_zero() {
        0
    } else if s.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_changes(seq: &[Poly], x: &Point) -> usize {
    let signs: Vec<i32> = seq.iter().map(|q| sign_at(q, x)).filter(|&s| s != 0).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in the half-open interval `(lo, hi]`.
pub fn count_real_roots(p: &Poly, lo: &Point, hi: &Point) -> usize {
    if p.is_zero() {
        return 0;
    }
    let seq = sturm_sequence(p);
    sign_changes(&seq, lo).saturating_sub(sign_changes(&seq, hi))
}

/// Cauchy bound: every root has absolute value below this.
fn root_bound(p: &Poly) -> Rational {
    let lc = p.leading().unwrap().abs();
    let m = p.coeffs().iter().map(|c| c.abs()).fold(Rational::zero(), |a, b| a.max(b));
    Rational::one() + m / lc
}

/// Disjoint intervals `[lo, hi]`, each containing exactly one distinct real
/// root of the square-free `p`; degenerate intervals are exact roots.
fn isolate(p: &Poly) -> Vec<(Rational, Rational)> {
    let seq = sturm_sequence(p);
    let b = root_bound(p);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let n = sign_changes(&seq, &Point::At(lo.clone()))
            .saturating_sub(sign_changes(&seq, &Point::At(hi.clone())));
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = split_point(p, &lo, &hi);
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

// A point strictly inside (lo, hi) that is not a root; intervals are
// half-open (lo, hi], so splitting on a root would misplace it.
fn split_point(p: &Poly, lo: &Rational, hi: &Rational) -> Rational {
    // deg+1 interior points, nearest the middle first; one is not a root
    let d = p.degree().unwrap_or(0) as i64 + 2;
    let mut js: Vec<i64> = (1..d).collect();
    js.sort_by_key(|j| (2 * j - d).abs());
    js.into_iter()
        .map(|j| lo + (hi - lo) * Rational::new(BigInt::from(j), BigInt::from(d)))
        .find(|m| !p.eval(m).is_zero())
        .expect("a polynomial of degree d has at most d roots")
}

/// All rational roots of `p` with multiplicities, in increasing order.
pub fn rational_roots(p: &Poly) -> Result<Vec<(Rational, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let zero_mult = p.low_order();
    let reduced = p.unshift(zero_mult);
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }
    if reduced.degree().unwrap_or(0) == 0 {
        return Ok(roots);
    }
    let sf = reduced.squarefree().primitive();
    let lead = sf.leading().unwrap().numer().abs();
    let konst = sf.coeff(0).numer().abs();
    // distinct fractions with denominators ≤ lead are ≥ 1/lead² apart
    let width = Rational::new(BigInt::one(), &lead * &lead * BigInt::from(2));
    for (mut lo, mut hi) in isolate(&sf) {
        let candidate = loop {
            if lo == hi {
                break lo;
            }
            if &hi - &lo < width {
                break simplest_between(&lo, &hi);
            }
            let mid = (&lo + &hi) / Rational::from_integer(BigInt::from(2));
            if sf.eval(&mid).is_zero() {
                break mid;
            }
            let left = count_real_roots(&sf, &Point::At(lo.clone()), &Point::At(mid.clone()));
            if left == 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        };
        let rational_root_shape = lead.is_multiple_of(candidate.denom())
            && (konst.is_zero() || konst.is_multiple_of(&candidate.numer().abs()));
        if rational_root_shape && sf.eval(&candidate).is_zero() {
            let m = reduced.root_multiplicity(&candidate);
            roots.push((candidate, m));
        }
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn case_a_discriminant_roots() {
        let d = Poly::from_factors(&[(-3, 2, 1), (3, 2, 2), (-3, 4, 2)]).scale(&int(2048));
        assert_eq!(
            rational_roots(&d).unwrap(),
            vec![(rat(-3, 2), 2), (rat(3, 4), 2), (rat(3, 2), 1)]
        );
    }

    #[test]
    fn case_e_discriminant_roots() {
        let d = Poly::from_factors(&[(-15, 2, 2), (-3, 2, 1), (1, 2, 1), (3, 2, 2)]).scale(&int(-16));
        let r = rational_roots(&d).unwrap();
        assert!(r.contains(&(rat(15, 2), 2)));
        assert_eq!(r.len(), 4);
    }

    #[test]
    fn no_rational_roots() {
        assert!(rational_roots(&Poly::from_ints(&[1, 0, 1])).unwrap().is_empty());
        assert!(rational_roots(&Poly::from_ints(&[-2, 0, 1])).unwrap().is_empty());
        assert_eq!(rational_roots(&Poly::zero()).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn zero_root_and_constants() {
        assert_eq!(rational_roots(&Poly::from_ints(&[0, 0, 3])).unwrap(), vec![(int(0), 2)]);
        assert!(rational_roots(&Poly::from_ints(&[7])).unwrap().is_empty());
    }

    #[test]
    fn close_rational_roots_are_separated() {
        let p = Poly::linear_root(rat(100, 301)) * Poly::linear_root(rat(1, 3)) * Poly::from_ints(&[-2, 0, 1]);
        assert_eq!(rational_roots(&p).unwrap(), vec![(rat(100, 301), 1), (rat(1, 3), 1)]);
    }

    #[test]
    fn sturm_counts() {
        // (η+6)³(η+14): roots −14, −6
        let p = Poly::from_factors(&[(6, 1, 3), (14, 1, 1)]);
        assert_eq!(count_real_roots(&p, &Point::NegInf, &Point::PosInf), 2);
        assert_eq!(count_real_roots(&p, &Point::At(int(0)), &Point::PosInf), 0);
        assert_eq!(count_real_roots(&p, &Point::At(int(-10)), &Point::At(int(0))), 1);
        let q = Poly::from_ints(&[390, 39, 1]);
        assert_eq!(count_real_roots(&q, &Point::NegInf, &Point::PosInf), 0);
    }

    proptest! {
        #[test]
        fn recovers_constructed_roots(
            roots in prop::collection::vec((-30i64..30, 1i64..9, 1usize..3), 1..4),
            extra in 1i64..5,
        ) {
            let mut p = Poly::from_ints(&[extra, 0, 1]);
            let mut expect: Vec<(Rational, usize)> = Vec::new();
            for (n, d, m) in roots {
                let r = rat(n, d);
                p = p * Poly::linear_root(r.clone()).pow(m as u32);
                match expect.iter_mut().find(|(x, _)| *x == r) {
                    Some(e) => e.1 += m,
                    None => expect.push((r, m)),
                }
            }
            expect.sort_by(|a, b| a.0.cmp(&b.0));
            let found = rational_roots(&p).unwrap();
            for (r, m) in &found {
                prop_assert!(p.eval(r).is_zero());
                prop_assert_eq!(p.root_multiplicity(r), *m);
            }
            prop_assert_eq!(found, expect);
        }
    }
}
