use num::One;

use super::case::{CaseName, CaseSpec, Family};
use crate::error::{Error, Result};
use crate::exact::{int, Poly, Rational};
use crate::quasi::{eigen_energy, eigenfunction, laguerre, wronskian, QuasiFunction, RationalQuasi};

/// `φ = scale · e^{−η/2} η^{eta_power} · numer / denom`.
#[derive(Clone, Debug, PartialEq)]
pub struct GlobalSolution {
    pub case: CaseName,
    pub n: i64,
    pub eta_power: Rational,
    pub denom: Poly,
    pub numer: Poly,
    pub energy: Rational,
    /// Constant relating the stored `numer` to the Wronskian quotient; 1 for
    /// extra members, which have no quotient.
    pub scale: Rational,
}

impl GlobalSolution {
    pub fn as_quasi(&self) -> RationalQuasi {
        RationalQuasi::new(
            -1,
            self.eta_power.clone() * int(2),
            self.numer.scale(&self.scale),
            self.denom.clone(),
        )
        .expect("nonzero denominator")
    }

    pub fn degree(&self) -> usize {
        self.numer.degree().unwrap_or(0)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.as_quasi().eval_f64(x)
    }
}

fn check_index(case: &CaseSpec, family: Option<&Family>, n: i64) -> Result<()> {
    if let Some(f) = family {
        if f.missing.contains(&n) {
            return Err(Error::IndexMissing { case: case.name, n });
        }
        if n < 0 && !f.extras.iter().any(|e| e.n == n) {
            return Err(Error::InvalidIndex { case: case.name, n });
        }
    } else if n < 0 {
        return Err(Error::InvalidIndex { case: case.name, n });
    }
    Ok(())
}

/// `W[seeds…, φ_n] / W[seeds…]` in canonical form.
pub fn wronskian_quotient(case: &CaseSpec, n: usize) -> Result<RationalQuasi> {
    let mut fs = case.seed_functions();
    let w = wronskian(&fs);
    if w.is_zero() {
        return Err(Error::DependentSeeds);
    }
    fs.push(eigenfunction(n, &case.g));
    RationalQuasi::quotient(&wronskian(&fs), &w)
}

/// The quotient with the numerator left as computed (scale 1).
pub fn quotient_solution(case: &CaseSpec, n: i64) -> Result<GlobalSolution> {
    if case.name == CaseName::G {
        return Err(Error::UnsupportedCase { case: case.name, what: "no solution family is recorded" });
    }
    check_index(case, case.family.as_ref(), n)?;
    if n < 0 {
        return Err(Error::UnsupportedCase { case: case.name, what: "extra members have no quotient construction" });
    }
    let q = wronskian_quotient(case, n as usize)?;
    let half = q.power() / int(2);
    let (eta_power, numer) = match &case.family {
        // keep the family's η-power even if the numerator vanishes at 0
        Some(f) => {
            let k = &half - &f.eta_power;
            let k = crate::exact::rational::as_i64(&k)
                .filter(|k| *k >= 0)
                .ok_or_else(|| Error::Incompatible(format!("η-power {half} for case {}", case.name)))?;
            (f.eta_power.clone(), q.num().shift(k as usize))
        }
        None => (half, q.num().clone()),
    };
    Ok(GlobalSolution {
        case: case.name,
        n,
        eta_power,
        denom: q.den().clone(),
        numer,
        energy: eigen_energy(n),
        scale: Rational::one(),
    })
}

/// The family member with the catalog normalization: the closed formula
/// where one exists, the printed form for extra members, and otherwise the
/// quotient rescaled to integer content 1 with a positive leading term.
pub fn transformed_solution(case: &CaseSpec, n: i64) -> Result<GlobalSolution> {
    if case.name == CaseName::G {
        return Err(Error::UnsupportedCase { case: case.name, what: "no solution family is recorded" });
    }
    check_index(case, case.family.as_ref(), n)?;
    if let Some(f) = &case.family {
        if let Some(e) = f.extras.iter().find(|e| e.n == n) {
            return Ok(GlobalSolution {
                case: case.name,
                n,
                eta_power: f.eta_power.clone(),
                denom: f.denominator.clone(),
                numer: e.poly.clone(),
                energy: e.energy.clone(),
                scale: Rational::one(),
            });
        }
    }
    let mut sol = quotient_solution(case, n)?;
    let target = match case.family.as_ref().and_then(|f| f.direct.as_ref()) {
        Some(_) => direct_polynomial(case, n)?,
        None => sol.numer.primitive(),
    };
    let c = sol
        .numer
        .proportional_to(&target)
        .ok_or_else(|| Error::Incompatible(format!("quotient and closed formula differ for case {} n={n}", case.name)))?;
    sol.numer = target;
    sol.scale = c;
    Ok(sol)
}

/// `(base + n·per_n)·L + deriv·L′` with `L = L_n^{(α)}(η)`.
pub fn direct_polynomial(case: &CaseSpec, n: i64) -> Result<Poly> {
    let d = case
        .family
        .as_ref()
        .and_then(|f| f.direct.as_ref())
        .ok_or(Error::UnsupportedCase { case: case.name, what: "no closed formula for the polynomials" })?;
    if n < 0 {
        return Err(Error::InvalidIndex { case: case.name, n });
    }
    let l = laguerre(n as usize, &d.alpha);
    Ok((d.base.clone() + d.per_n.scale(&int(n))) * l.clone() + d.deriv.clone() * l.derivative())
}

/// The solution as a quasi-function times `1/denom`, for residual checks.
pub fn solution_quasi(sol: &GlobalSolution) -> (QuasiFunction, Poly) {
    (QuasiFunction::new(-1, sol.eta_power.clone() * int(2), sol.numer.scale(&sol.scale)), sol.denom.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn printed_members_are_reproduced() {
        for name in CaseName::TABLE {
            let case = name.spec();
            for (n, p, _) in &case.family.as_ref().unwrap().printed {
                let s = transformed_solution(&case, *n).unwrap();
                assert_eq!(&s.numer, p, "case {name} n={n}");
            }
        }
    }

    #[test]
    fn quotient_agrees_with_direct_formula() {
        for name in CaseName::TABLE {
            let case = name.spec();
            for n in 0..=5 {
                let q = quotient_solution(&case, n).unwrap();
                let d = direct_polynomial(&case, n).unwrap();
                assert!(q.numer.proportional_to(&d).is_some(), "case {name} n={n}");
                assert_eq!(q.denom, case.family.as_ref().unwrap().denominator, "case {name} n={n}");
                assert_eq!(q.numer.degree(), Some(n as usize + 3));
            }
        }
    }

    #[test]
    fn missing_and_invalid_indices() {
        let a = CaseName::A.spec();
        assert_eq!(transformed_solution(&a, -1), Err(Error::IndexMissing { case: CaseName::A, n: -1 }));
        assert_eq!(transformed_solution(&a, -3), Err(Error::InvalidIndex { case: CaseName::A, n: -3 }));
        let b = CaseName::B.spec();
        for n in [-2, -1] {
            assert_eq!(transformed_solution(&b, n), Err(Error::IndexMissing { case: CaseName::B, n }));
        }
        assert!(matches!(transformed_solution(&CaseName::G.spec(), 0), Err(Error::UnsupportedCase { .. })));
        assert!(matches!(direct_polynomial(&CaseName::H.spec(), 0), Err(Error::UnsupportedCase { .. })));
    }

    #[test]
    fn case_h_groundstate() {
        let h = CaseName::H.spec();
        let s = transformed_solution(&h, 0).unwrap();
        assert_eq!(s.numer, Poly::from_ints(&[425880, 67704, 4004, 104, 1]));
        assert_eq!(s.eta_power, rat(51, 4));
        for n in 0..=3 {
            assert_eq!(transformed_solution(&h, n).unwrap().degree(), n as usize + 4);
        }
    }

    #[test]
    fn extra_member_energy() {
        let s = transformed_solution(&CaseName::A.spec(), -2).unwrap();
        assert_eq!(s.energy, int(-8));
        assert_eq!(s.numer, Poly::from_ints(&[15, 4]));
    }
}
