//! Resultants and discriminants via fraction-free elimination on the
//! Sylvester matrix.

use super::poly::{Coefficient, Poly};
use crate::error::{Error, Result};

/// Sylvester matrix of `a` (degree n) and `b` (degree m): m shifted rows of
/// `a`'s coefficients followed by n shifted rows of `b`'s, highest degree first.
pub fn sylvester_matrix<R: Coefficient>(a: &Poly<R>, b: &Poly<R>) -> Vec<Vec<R>> {
    let n = a.degree().expect("nonzero a");
    let m = b.degree().expect("nonzero b");
    let size = n + m;
    let row = |p: &Poly<R>, offset: usize| {
        let mut r = vec![R::zero(); size];
        for (k, c) in p.coeffs().iter().rev().enumerate() {
            r[offset + k] = c.clone();
        }
        r
    };
    let mut rows = Vec::with_capacity(size);
    rows.extend((0..m).map(|i| row(a, i)));
    rows.extend((0..n).map(|i| row(b, i)));
    rows
}

/// Determinant by Bareiss fraction-free elimination. Every division is exact
/// in an integral domain, so entries stay in `R`.
pub fn bareiss_determinant<R: Coefficient>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    let mut sign_flip = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        -det
    } else {
        det
    }
}

/// `res(a, b)`, normalized so that `res(a, b) = lc(a)^deg(b) · ∏ b(αᵢ)` over
/// the roots αᵢ of `a`.
pub fn resultant<R: Coefficient>(a: &Poly<R>, b: &Poly<R>) -> Result<R> {
    let (Some(n), Some(m)) = (a.degree(), b.degree()) else {
        return Err(Error::ZeroPolynomial);
    };
    if n == 0 && m == 0 {
        return Ok(R::one());
    }
    Ok(bareiss_determinant(sylvester_matrix(a, b)))
}

/// `(−1)^{n(n−1)/2} · res(p, p′) / lc(p)`.
pub fn discriminant<R: Coefficient>(p: &Poly<R>) -> Result<R> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooLow { degree: n, required: 2 });
    }
    let lc = p.leading().expect("nonzero");
    let r = resultant(p, &p.derivative())?.exact_div(lc)?;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::GPoly;
    use crate::exact::rational::{int, rat, Rational};
    use num::{One, Zero};
    use proptest::prelude::*;

    // Cofactor expansion along the first row: independent of Bareiss.
    fn laplace_det<R: Coefficient>(m: &[Vec<R>]) -> R {
        let n = m.len();
        if n == 0 {
            return R::one();
        }
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = R::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<R>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = m[0][j].clone() * laplace_det(&minor);
            acc = if j % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    fn g() -> Poly {
        Poly::var()
    }

    fn case_a_bracket() -> GPoly {
        GPoly::new(vec![
            Poly::from_ints(&[-9, 18, 4, -8]),
            Poly::from_ints(&[18, 0, -8]),
            Poly::from_ints(&[12, 8]),
            Poly::from_ints(&[8]),
        ])
    }

    #[test]
    fn linear_resultant() {
        let r = resultant(&Poly::from_ints(&[-1, 1]), &Poly::from_ints(&[1, 1])).unwrap();
        assert_eq!(r, int(2));
    }

    #[test]
    fn evaluation_property() {
        // res(η², η − g) = g²
        let a = GPoly::new(vec![Poly::zero(), Poly::zero(), Poly::one()]);
        let b = GPoly::new(vec![-g(), Poly::one()]);
        assert_eq!(resultant(&a, &b).unwrap(), g() * g());
    }

    #[test]
    fn quadratic_discriminant() {
        assert_eq!(discriminant(&Poly::from_ints(&[-1, 0, 1])).unwrap(), int(4));
        let err = discriminant(&Poly::from_ints(&[1, 1])).unwrap_err();
        assert_eq!(err, Error::DegreeTooLow { degree: 1, required: 2 });
    }

    #[test]
    fn case_a_resultant_matches_sylvester_expansion() {
        let p = case_a_bracket();
        let m = sylvester_matrix(&p, &p.derivative());
        assert_eq!(resultant(&p, &p.derivative()).unwrap(), laplace_det(&m));
    }

    #[test]
    fn case_a_discriminant_factored_form() {
        // 2048 (2g−3)(2g+3)²(4g−3)²
        let expect = Poly::from_factors(&[(-3, 2, 1), (3, 2, 2), (-3, 4, 2)]).scale(&int(2048));
        assert_eq!(discriminant(&case_a_bracket()).unwrap(), expect);
    }

    #[test]
    fn case_b_discriminant_factored_form() {
        let b = GPoly::new(vec![
            Poly::from_ints(&[5, -2, -20, 8]),
            Poly::from_ints(&[10, 16, -8]),
            Poly::from_ints(&[20, -8]),
            Poly::from_ints(&[8]),
        ]);
        let expect = Poly::from_factors(&[(-5, 2, 2), (1, 2, 1), (-1, 4, 2)]).scale(&int(-2048));
        assert_eq!(discriminant(&b).unwrap(), expect);
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let m = vec![
            vec![int(0), int(2), int(1)],
            vec![int(1), int(0), int(3)],
            vec![int(4), int(1), int(0)],
        ];
        assert_eq!(bareiss_determinant(m.clone()), laplace_det(&m));
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec((-6i64..6, 1i64..4), 1..4)
            .prop_map(|v| Poly::new(v.into_iter().map(|(n, d)| rat(n, d)).collect()))
    }

    fn cubic_gpoly() -> impl Strategy<Value = GPoly> {
        (prop::collection::vec(small_poly(), 3), -5i64..5)
            .prop_filter_map("nonzero lead", |(mut v, lead)| {
                if lead == 0 {
                    return None;
                }
                v.push(Poly::from_ints(&[lead]));
                Some(GPoly::new(v))
            })
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_cofactor_expansion(entries in prop::collection::vec(-9i64..9, 16)) {
            let m: Vec<Vec<Rational>> = entries.chunks(4).map(|r| r.iter().map(|&k| int(k)).collect()).collect();
            prop_assert_eq!(bareiss_determinant(m.clone()), laplace_det(&m));
        }

        #[test]
        fn discriminant_commutes_with_substitution(p in cubic_gpoly(), n in -7i64..7, d in 1i64..4) {
            let g0 = rat(n, d);
            let lhs = discriminant(&p.at_g(&g0)).unwrap();
            let rhs = discriminant(&p).unwrap().eval(&g0);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn squared_factor_kills_discriminant(a in -6i64..6, b in -6i64..6, c in 1i64..4) {
            // (η − a/c)²(η − b) has a double root
            let p = Poly::linear_root(rat(a, c)).pow(2) * Poly::linear_root(int(b));
            prop_assert!(discriminant(&p).unwrap().is_zero());
        }
    }
}
