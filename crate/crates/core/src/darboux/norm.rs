use num::{BigInt, One};
use serde::Serialize;

use super::case::{CaseName, CaseSpec};
use super::solution::transformed_solution;
use crate::error::{Error, Result};
use crate::exact::rational::{as_i64, to_f64};
use crate::exact::{int, Rational};

/// `∏ⱼ(E − Ẽⱼ) · Γ(n + g + 1/2) / (2·n!)` times the case's measure factor
/// and normalization, kept as separate exact pieces.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormRecord {
    pub case: CaseName,
    pub n: i64,
    #[serde(serialize_with = "super::export::ser_rational")]
    pub energy_factor: Rational,
    #[serde(serialize_with = "super::export::ser_rational")]
    pub gamma_arg: Rational,
    /// `n!`, absent for negative n.
    #[serde(serialize_with = "super::export::ser_opt_rational")]
    pub factorial: Option<Rational>,
    /// 2 when the measure is `dη` (twice the `dx` norm), 1 for `dη/2`.
    #[serde(serialize_with = "super::export::ser_rational")]
    pub measure_factor: Rational,
    /// Square of the constant between the quotient and the stored polynomial.
    #[serde(serialize_with = "super::export::ser_rational")]
    pub normalization: Rational,
    /// False for extra members, whose norm has no closed form here.
    pub formula_applies: bool,
    /// Everything in front of `Γ(gamma_arg)`, when the formula applies.
    #[serde(serialize_with = "super::export::ser_opt_rational")]
    pub rational_factor: Option<Rational>,
    /// The full norm when `gamma_arg` is a positive integer.
    #[serde(serialize_with = "super::export::ser_opt_rational")]
    pub exact_value: Option<Rational>,
}

impl NormRecord {
    pub fn value_f64(&self, gamma: impl Fn(f64) -> f64) -> Option<f64> {
        self.rational_factor.as_ref().map(|r| to_f64(r) * gamma(to_f64(&self.gamma_arg)))
    }
}

pub fn factorial(n: u64) -> Rational {
    Rational::from_integer((1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)))
}

fn measure_factor(name: CaseName) -> Rational {
    match name {
        CaseName::H => int(1),
        _ => int(2),
    }
}

pub fn predicted_norm(case: &CaseSpec, n: i64) -> Result<NormRecord> {
    let family = case.family.as_ref().ok_or(Error::NotSquareIntegrable(case.name))?;
    if family.weight.is_none() {
        return Err(Error::NotSquareIntegrable(case.name));
    }
    let sol = transformed_solution(case, n)?;
    let energy = int(4 * n);
    let energy_factor = case.seed_energies().iter().fold(Rational::one(), |acc, e| acc * (&energy - e));
    let gamma_arg = int(n) + &case.g + Rational::new(1.into(), 2.into());
    let formula_applies = n >= 0;
    let factorial = formula_applies.then(|| factorial(n as u64));
    let normalization = sol.scale.clone() * sol.scale.clone();
    let mf = measure_factor(case.name);
    let rational_factor = factorial
        .as_ref()
        .map(|f| mf.clone() * energy_factor.clone() / (int(2) * f.clone() * normalization.clone()));
    let exact_value = match (&rational_factor, as_i64(&gamma_arg)) {
        (Some(r), Some(k)) if k >= 1 => Some(r * factorial_of(k - 1)),
        _ => None,
    };
    Ok(NormRecord {
        case: case.name,
        n,
        energy_factor,
        gamma_arg,
        factorial,
        measure_factor: mf,
        normalization,
        formula_applies,
        rational_factor,
        exact_value,
    })
}

fn factorial_of(k: i64) -> Rational {
    factorial(k.unsigned_abs())
}

/// `(a)_k = a(a+1)…(a+k−1)`.
pub fn pochhammer(a: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, j| acc * (a + int(j as i64)))
}

/// The closed-form norms as printed, `poly(n)·Γ(n + shift)/n!`, split the
/// same way: the factor in front of Γ.
pub fn printed_norm_factor(case: &CaseSpec, n: i64) -> Option<Rational> {
    let nf = case.family.as_ref()?.norm.as_ref()?;
    if n < 0 {
        return None;
    }
    Some(nf.poly.eval(&int(n)) / factorial(n as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn case_e_matches_pochhammer_form() {
        let e = CaseName::E.spec();
        for n in 0..=3 {
            let rec = predicted_norm(&e, n).unwrap();
            let printed = int(16) * int(n + 10) * int(n + 6) * pochhammer(&int(n + 1), 7);
            assert_eq!(rec.exact_value, Some(printed), "n={n}");
        }
        let rec = predicted_norm(&e, 0).unwrap();
        assert_eq!(rec.energy_factor, int(960));
        assert_eq!(rec.gamma_arg, int(8));
    }

    #[test]
    fn case_a_factor_at_zero() {
        let rec = predicted_norm(&CaseName::A.spec(), 0).unwrap();
        assert_eq!(rec.rational_factor, Some(int(104)));
        assert_eq!(rec.gamma_arg, Rational::new(5.into(), 4.into()));
        let extra = predicted_norm(&CaseName::A.spec(), -2).unwrap();
        assert!(!extra.formula_applies);
        assert_eq!(extra.rational_factor, None);
    }

    #[test]
    fn printed_and_predicted_factors_agree() {
        for name in [CaseName::A, CaseName::B, CaseName::E] {
            let case = name.spec();
            for n in 0..=4 {
                let rec = predicted_norm(&case, n).unwrap();
                assert_eq!(rec.rational_factor, printed_norm_factor(&case, n), "case {name} n={n}");
            }
        }
    }

    #[test]
    fn non_normalizable_cases() {
        for name in [CaseName::D, CaseName::F] {
            assert_eq!(predicted_norm(&name.spec(), 0), Err(Error::NotSquareIntegrable(name)));
        }
    }
}
