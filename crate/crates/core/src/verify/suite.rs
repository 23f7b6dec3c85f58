use num::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::quadrature::{check_orthogonality, weight_positive};
use super::residual::{
    check_eta_ode, check_member_schrodinger, check_partner_potential, check_polynomial_ode, check_prepotential,
    ResidualReport,
};
use crate::darboux::{
    apparent_singularities, deformed_potential, direct_polynomial, family_indices, predicted_norm, quotient_solution,
    transformed_solution, CaseName, CaseSpec, Exponents,
};
use crate::error::Result;
use crate::exact::{discriminant, int, Poly};
use crate::quasi::{wronskian, QuasiFunction};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckEntry {
    pub identity: String,
    pub case: Option<CaseName>,
    pub indices: Vec<i64>,
    /// "exact" or "numeric".
    pub kind: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Poly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
}

impl CheckEntry {
    fn exact(identity: &str, case: CaseName, indices: Vec<i64>, residual: Poly) -> Self {
        CheckEntry {
            identity: identity.into(),
            case: Some(case),
            indices,
            kind: "exact",
            passed: residual.is_zero(),
            residual: Some(residual),
            error: None,
            message: None,
        }
    }

    fn flag(identity: &str, case: CaseName, indices: Vec<i64>, ok: bool, message: Option<String>) -> Self {
        CheckEntry {
            identity: identity.into(),
            case: Some(case),
            indices,
            kind: "exact",
            passed: ok,
            residual: None,
            error: None,
            message: if ok { None } else { message },
        }
    }

    fn from_report(r: ResidualReport) -> Self {
        CheckEntry {
            identity: r.identity,
            case: r.case,
            indices: r.indices,
            kind: "exact",
            passed: r.exact,
            residual: Some(r.residual),
            error: r.numeric_error,
            message: None,
        }
    }

    fn failed(identity: &str, case: CaseName, indices: Vec<i64>, e: impl ToString) -> Self {
        Self::flag(identity, case, indices, false, Some(e.to_string()))
    }
}

fn lift(identity: &str, case: CaseName, indices: Vec<i64>, r: Result<ResidualReport>) -> CheckEntry {
    match r {
        Ok(r) => CheckEntry::from_report(r),
        Err(e) => CheckEntry::failed(identity, case, indices, e),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub tolerance: f64,
    pub passed: bool,
    pub total: usize,
    pub failed: usize,
    pub checks: Vec<CheckEntry>,
}

/// Replacement polynomial for a printed or extra member, used to exercise
/// the failure path.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Override {
    pub case: CaseName,
    pub n: i64,
    pub poly: Poly,
}

pub fn apply_override(cases: &mut [CaseSpec], o: &Override) {
    for c in cases.iter_mut().filter(|c| c.name == o.case) {
        if let Some(f) = c.family.as_mut() {
            for (_, p, _) in f.printed.iter_mut().filter(|(n, _, _)| *n == o.n) {
                *p = o.poly.clone();
            }
            for e in f.extras.iter_mut().filter(|e| e.n == o.n) {
                e.poly = o.poly.clone();
            }
        }
    }
}

fn upto(name: CaseName) -> i64 {
    if name == CaseName::H {
        3
    } else {
        5
    }
}

fn case_checks(case: &CaseSpec) -> Vec<CheckEntry> {
    let name = case.name;
    let mut out = Vec::new();
    let w = wronskian(&case.seed_functions());
    out.push(CheckEntry::flag(
        "wronskian",
        name,
        vec![],
        w.proportional_to(&case.expected_wronskian).is_some(),
        Some(format!("computed {w}")),
    ));
    match deformed_potential(&case.g, &case.seeds) {
        Ok(u) => out.push(CheckEntry::exact("potential", name, vec![], (u.rational - case.expected_potential.clone()).num)),
        Err(e) => out.push(CheckEntry::failed("potential", name, vec![], e)),
    }
    if let Some(d) = &case.generic {
        let entry = match discriminant(&d.bracket) {
            Ok(disc) if d.discriminant_up_to_constant => CheckEntry::flag(
                "discriminant",
                name,
                vec![],
                disc.proportional_to(&d.discriminant).is_some(),
                Some(format!("computed {disc}")),
            ),
            Ok(disc) => CheckEntry::exact("discriminant", name, vec![], disc - d.discriminant.clone()),
            Err(e) => CheckEntry::failed("discriminant", name, vec![], e),
        };
        out.push(entry);
    }
    out.push(exponent_check(name, &w));
    out
}

fn exponent_check(name: CaseName, w: &QuasiFunction) -> CheckEntry {
    match apparent_singularities(w) {
        Ok(reports) => {
            let ok = reports.iter().any(|r| r.m == 3)
                && reports.iter().all(|r| match r.m {
                    1 => r.exponents == Exponents::Rational(int(-1), int(2)),
                    3 => r.exponents == Exponents::Rational(int(-2), int(3)),
                    _ => false,
                } && r.trivial_monodromy);
            let text = reports.iter().map(|r| format!("η0={} m={} ρ={}", r.eta0, r.m, r.exponents)).collect::<Vec<_>>();
            CheckEntry::flag("exponents", name, vec![], ok, Some(text.join("; ")))
        }
        Err(e) => CheckEntry::failed("exponents", name, vec![], e),
    }
}

fn member_checks(case: &CaseSpec, n: i64) -> Vec<CheckEntry> {
    let name = case.name;
    let mut out = vec![
        lift("schrodinger", name, vec![n], check_member_schrodinger(case, n)),
        lift("eta_ode", name, vec![n], check_eta_ode(case, n)),
        lift("polynomial_ode", name, vec![n], check_polynomial_ode(case, n)),
    ];
    let family = case.family.as_ref().expect("member checks need a family");
    match transformed_solution(case, n) {
        Ok(sol) => {
            if n >= 0 {
                let ok = sol.degree() == n as usize + family.degree_offset;
                out.push(CheckEntry::flag("degree", name, vec![n], ok, Some(format!("degree {}", sol.degree()))));
                let ok = sol.denom == family.denominator;
                out.push(CheckEntry::flag("denominator", name, vec![n], ok, Some(format!("denominator {}", sol.denom))));
            }
            if let Some((_, p, up_to_constant)) = family.printed.iter().find(|(k, _, _)| *k == n) {
                out.push(if *up_to_constant {
                    CheckEntry::flag(
                        "printed_member",
                        name,
                        vec![n],
                        sol.numer.proportional_to(p).is_some(),
                        Some(format!("computed {}", sol.numer)),
                    )
                } else {
                    CheckEntry::exact("printed_member", name, vec![n], sol.numer.clone() - p.clone())
                });
            }
        }
        Err(e) => out.push(CheckEntry::failed("member", name, vec![n], e)),
    }
    if n >= 0 && family.direct.is_some() {
        let entry = match (quotient_solution(case, n), direct_polynomial(case, n)) {
            (Ok(q), Ok(d)) => CheckEntry::flag(
                "direct_formula",
                name,
                vec![n],
                q.numer.proportional_to(&d).is_some(),
                Some(format!("quotient {} vs formula {}", q.numer, d)),
            ),
            (Err(e), _) | (_, Err(e)) => CheckEntry::failed("direct_formula", name, vec![n], e),
        };
        out.push(entry);
    }
    out
}

fn orthogonality_checks(case: &CaseSpec, tol: f64) -> Vec<CheckEntry> {
    let name = case.name;
    let idx = family_indices(case.family.as_ref().unwrap(), 3);
    let mut out = Vec::new();
    for (i, &n) in idx.iter().enumerate() {
        for &m in &idx[i..] {
            out.push(match check_orthogonality(case, n, m, tol) {
                Ok(c) => CheckEntry {
                    identity: "orthogonality".into(),
                    case: Some(name),
                    indices: vec![n, m],
                    kind: "numeric",
                    passed: c.passed,
                    residual: None,
                    error: Some(c.error),
                    message: Some(format!(
                        "value {:e}, expected {}, estimated error {:e}",
                        c.result.value,
                        c.expected.map_or("n/a".into(), |e| format!("{e:e}")),
                        c.result.estimated_error
                    )),
                },
                Err(e) => CheckEntry::failed("orthogonality", name, vec![n, m], e),
            });
        }
    }
    out.push(CheckEntry::flag(
        "weight_from_solution",
        name,
        vec![],
        crate::darboux::derived_weight(case).as_ref() == case.family.as_ref().and_then(|f| f.weight.as_ref()),
        Some("recorded weight differs from |φ|²".into()),
    ));
    out.push(match weight_positive(case) {
        Ok(ok) => CheckEntry::flag("weight_positive", name, vec![], ok, Some("weight changes sign".into())),
        Err(e) => CheckEntry::failed("weight_positive", name, vec![], e),
    });
    out
}

fn norm_law_checks(case: &CaseSpec) -> Vec<CheckEntry> {
    let Some(nf) = case.family.as_ref().and_then(|f| f.norm.as_ref()) else { return vec![] };
    (0..=3)
        .map(|n| match predicted_norm(case, n) {
            Ok(rec) => {
                let printed = nf.poly.eval(&int(n)) / crate::darboux::factorial(n as u64);
                let same_gamma = rec.gamma_arg == int(n) + &nf.gamma_shift;
                let ok = same_gamma && rec.rational_factor.as_ref() == Some(&printed);
                CheckEntry::flag("norm_product", case.name, vec![n], ok, Some(format!("{rec:?}")))
            }
            Err(e) => CheckEntry::failed("norm_product", case.name, vec![n], e),
        })
        .collect()
}

fn structural_checks() -> Vec<CheckEntry> {
    let (b, c, d) = (CaseName::B.spec(), CaseName::C.spec(), CaseName::D.spec());
    let mut out = Vec::new();
    for n in 0..=2 {
        let ok = match (quotient_solution(&b, n), quotient_solution(&c, n)) {
            (Ok(x), Ok(y)) => x.as_quasi().proportional_to(&y.as_quasi()).is_some(),
            _ => false,
        };
        out.push(CheckEntry::flag("b_equals_c", CaseName::C, vec![n], ok, Some("solutions differ".into())));
    }
    let (Some(gc), Some(gd)) = (&c.generic, &d.generic) else { return out };
    let wc = wronskian(&c.seed_functions());
    let wd = wronskian(&d.seed_functions());
    let flipped = wc.poly().scale_var(&int(-1));
    let generic_ok = gd.bracket == gc.bracket.scale_var(&int(-1)) && gd.prefactor == gc.prefactor;
    out.push(CheckEntry::flag(
        "d_from_c",
        CaseName::D,
        vec![],
        generic_ok && *wd.poly() == flipped,
        Some(format!("{} vs {}", wd.poly(), flipped)),
    ));
    out
}

type Task = Box<dyn Fn() -> Vec<CheckEntry> + Send + Sync>;

/// Runs every check for the selected cases (all when `only` is `None`).
pub fn run_suite(only: Option<CaseName>, tol: f64) -> SuiteReport {
    run_suite_on(crate::darboux::catalog(), only, tol)
}

pub fn run_suite_on(cases: Vec<CaseSpec>, only: Option<CaseName>, tol: f64) -> SuiteReport {
    let selected: Vec<CaseSpec> = cases.into_iter().filter(|c| only.is_none_or(|o| o == c.name)).collect();
    let mut tasks: Vec<Task> = Vec::new();
    for case in &selected {
        let c = case.clone();
        tasks.push(Box::new(move || case_checks(&c)));
        if let Some(f) = &case.family {
            for n in family_indices(f, upto(case.name)) {
                let c = case.clone();
                tasks.push(Box::new(move || member_checks(&c, n)));
            }
            if f.prepotential.is_some() {
                let c = case.clone();
                tasks.push(Box::new(move || vec![lift("prepotential", c.name, vec![], check_prepotential(&c))]));
            }
            if f.partner.is_some() {
                let c = case.clone();
                tasks.push(Box::new(move || vec![lift("partner_potential", c.name, vec![], check_partner_potential(&c))]));
            }
            if f.weight.is_some() {
                let c = case.clone();
                tasks.push(Box::new(move || orthogonality_checks(&c, tol)));
                let c = case.clone();
                tasks.push(Box::new(move || norm_law_checks(&c)));
            }
        }
    }
    if only.is_none_or(|o| matches!(o, CaseName::B | CaseName::C | CaseName::D)) {
        tasks.push(Box::new(structural_checks));
    }
    let checks: Vec<CheckEntry> = tasks.par_iter().map(|t| t()).collect::<Vec<_>>().into_iter().flatten().collect();
    let failed = checks.iter().filter(|c| !c.passed).count();
    SuiteReport { tolerance: tol, passed: failed == 0, total: checks.len(), failed, checks }
}
