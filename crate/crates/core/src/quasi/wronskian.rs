use super::function::QuasiFunction;
use crate::exact::{Coefficient, Poly};

/// Determinant by cofactor expansion along the first row. Fine for the
/// matrix sizes here (M ≤ 4).
pub(crate) fn laplace<R: Coefficient>(m: &[Vec<R>]) -> R {
    match m.len() {
        0 => R::one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = R::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = m[0][j].clone() * laplace(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// `W[f_1, …, f_M] = det(d^k f_j / dx^k)`, rows in the given order.
///
/// Row j carries `e^{c_j x²/2} x^{p_j}` and column k carries `x^{−k}`, so the
/// result is `e^{Σc x²/2} x^{Σp − M(M−1)/2} · det(P_jk)` with `P_jk` the
/// polynomial part of the k-th derivative before canonicalization.
pub fn wronskian<R: Coefficient>(fs: &[QuasiFunction<R>]) -> QuasiFunction<R> {
    let m = fs.len();
    assert!(m >= 1, "Wronskian of no functions");
    if fs.iter().any(|f| f.is_zero()) {
        return QuasiFunction::zero();
    }
    let rows: Vec<Vec<Poly<R>>> = fs
        .iter()
        .map(|f| {
            let mut row = Vec::with_capacity(m);
            let mut p = f.poly().clone();
            let mut power = f.power().clone();
            for _ in 0..m {
                let next = QuasiFunction::raw_derivative_parts(f.expo(), &power, &p);
                row.push(p);
                p = next;
                power = power - R::one();
            }
            row
        })
        .collect();
    let det = laplace(&rows);
    let expo = fs.iter().map(|f| f.expo()).sum();
    let power = fs.iter().fold(R::zero(), |acc, f| acc + f.power().clone()) - R::from_int((m * (m - 1) / 2) as i64);
    QuasiFunction::new(expo, power, det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat, GPoly, Rational};
    use num::Zero;
    use crate::quasi::seed::{seed_solution, SeedKind::*, SeedSpec};

    fn seed(kind: crate::quasi::SeedKind, v: usize, g: &Rational) -> QuasiFunction {
        seed_solution(SeedSpec::new(kind, v), g)
    }

    #[test]
    fn trivial_wronskians() {
        let f = seed(I, 2, &rat(3, 4));
        assert_eq!(wronskian(std::slice::from_ref(&f)), f);
        assert!(wronskian(&[f.clone(), f.scale(&int(3))]).is_zero());
    }

    #[test]
    fn case_e_cubic_zero() {
        let g = rat(15, 2);
        let w = wronskian(&[seed(I, 2, &g), seed(II, 1, &g)]);
        let expect = QuasiFunction::from_poly(Poly::from_factors(&[(6, 1, 3), (14, 1, 1)]));
        assert_eq!(w, expect);
    }

    #[test]
    fn case_h_cubic_zero() {
        let g = rat(53, 2);
        let w = wronskian(&[seed(I, 1, &g), seed(II, 1, &g), seed(II, 2, &g)]);
        let poly = Poly::from_factors(&[(30, 1, 3)]) * Poly::from_ints(&[390, 39, 1]);
        assert_eq!(w, QuasiFunction::new(-1, rat(-51, 2), poly.scale(&int(-4))));
    }

    #[test]
    fn case_a_generic() {
        let g: Poly = Poly::var();
        let w = wronskian(&[seed_solution(SeedSpec::new(III, 1), &g), seed_solution(SeedSpec::new(I, 2), &g)]);
        let bracket = GPoly::new(vec![
            Poly::from_ints(&[-9, 18, 4, -8]),
            Poly::from_ints(&[18, 0, -8]),
            Poly::from_ints(&[12, 8]),
            Poly::from_ints(&[8]),
        ]);
        let prefactor = Poly::from_rationals(&[(1, 16), (1, 8)]);
        assert_eq!(w.expo(), 2);
        assert!(w.power().is_zero());
        assert_eq!(*w.poly(), bracket.mul_coeff(&prefactor));
    }

    #[test]
    fn swapping_rows_flips_sign() {
        let g = rat(39, 10);
        let a = wronskian(&[seed(I, 3, &g), seed(II, 1, &g)]);
        let b = wronskian(&[seed(II, 1, &g), seed(I, 3, &g)]);
        assert_eq!(a, b.neg());
    }
}
