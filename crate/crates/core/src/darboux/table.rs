use num::{One, Signed, Zero};

use super::case::{CaseName, CaseSpec, Weight};
use super::potential::deformed_potential;
use crate::error::Result;
use crate::exact::factor::superscript;
use crate::exact::{count_real_roots, factor_rational, int, rat, Factored, Point, Poly, RatFunc, Rational};
use crate::quasi::{wronskian, QuasiFunction};

/// The weight `|φ|²` in the η-measure: `e^{−η} η^{2a − 1/2} / denom²`, with
/// the constant set by the case's measure convention. `None` unless it is
/// integrable at 0 and the denominator has no root on `[0, ∞)`.
pub fn derived_weight(case: &CaseSpec) -> Option<Weight> {
    let f = case.family.as_ref()?;
    let exponent = int(2) * &f.eta_power - rat(1, 2);
    let d = &f.denominator;
    let regular = !d.eval(&Rational::zero()).is_zero()
        && count_real_roots(d, &Point::At(Rational::zero()), &Point::PosInf) == 0;
    if exponent <= int(-1) || !regular {
        return None;
    }
    let constant = if case.name == CaseName::H { rat(1, 2) } else { Rational::one() };
    Some(Weight { exponent, denominator: d.pow(2), constant })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub case: CaseName,
    pub seed: String,
    pub potential: String,
    pub weight: String,
    pub extra: String,
    pub wronskian: QuasiFunction,
    /// The potential minus `η + c/η + const`.
    pub deformation: RatFunc,
    pub potential_constant: Rational,
    pub derived_weight: Option<Weight>,
    pub extras: Vec<i64>,
}

fn prefix(expo: i64, power: &Rational) -> String {
    let pre = QuasiFunction::new(expo, power.clone(), Poly::one()).to_string();
    pre.trim_end_matches("(1)").trim_end_matches('·').to_string()
}

fn bare_factors(p: &Poly) -> Result<String> {
    let f = factor_rational(p)?;
    Ok(Factored { constant: Rational::one(), factors: f.factors }.render_x())
}

/// The Wronskian with its polynomial part factored over the rationals.
pub fn wronskian_text(w: &QuasiFunction) -> Result<String> {
    let f = factor_rational(w.poly())?;
    let body = join(prefix(w.expo(), w.power()), bare_factors(w.poly())?);
    Ok(if f.constant.is_one() {
        body
    } else if (-f.constant.clone()).is_one() {
        format!("-{body}")
    } else {
        format!("{}·{body}", f.constant)
    })
}

fn join(prefix: String, body: String) -> String {
    if prefix.is_empty() {
        body
    } else {
        format!("{prefix}·{body}")
    }
}

pub fn weight_text(w: &Weight) -> Result<String> {
    let mut s = String::new();
    if !w.constant.is_one() {
        s.push_str(&format!("{}·", w.constant));
    }
    s.push_str("e^{-η}");
    if !w.exponent.is_zero() {
        s.push_str(&format!("·η^{{{}}}", w.exponent));
    }
    if !w.denominator.is_one() {
        let f = factor_rational(&w.denominator)?;
        let body: String = f
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { format!("({})", p.render(&["η"])) } else { format!("({}){}", p.render(&["η"]), superscript(*e)) })
            .collect();
        let wrapped = if f.factors.len() > 1 { format!("({body})") } else { body };
        s.push_str(&format!("/{wrapped}"));
    }
    Ok(s)
}

fn row(case: &CaseSpec, previous: &[(CaseName, RatFunc)]) -> Result<TableRow> {
    let w = wronskian(&case.seed_functions());
    let seed = join(prefix(w.expo(), w.power()), bare_factors(w.poly())?);
    let u = deformed_potential(&case.g, &case.seeds)?;
    let parts = u.parts()?;
    let potential = match previous.iter().find_map(|(n, r)| u.rational.constant_offset(r).map(|c| (*n, c))) {
        Some((n, c)) if c.is_zero() => format!("U_{n}"),
        Some((n, c)) if c.is_negative() => format!("U_{n} - {}", -c),
        Some((n, c)) => format!("U_{n} + {c}"),
        None => parts.render_deformation(),
    };
    let derived = derived_weight(case);
    let weight = match &derived {
        Some(w) => weight_text(w)?,
        None => "n.a.".into(),
    };
    let extras: Vec<i64> = case.family.as_ref().map(|f| f.extras.iter().map(|e| e.n).collect()).unwrap_or_default();
    let extra = if extras.is_empty() {
        "none".into()
    } else {
        extras.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(", ")
    };
    Ok(TableRow {
        case: case.name,
        seed,
        potential,
        weight,
        extra,
        wronskian: w,
        deformation: parts.deformation(),
        potential_constant: parts.constant(),
        derived_weight: derived,
        extras,
    })
}

/// Rows for the cases with a polynomial family given in closed form.
pub fn summary_table() -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    let mut seen: Vec<(CaseName, RatFunc)> = Vec::new();
    for name in CaseName::TABLE {
        let case = name.spec();
        let r = row(&case, &seen)?;
        seen.push((name, deformed_potential(&case.g, &case.seeds)?.rational));
        rows.push(r);
    }
    Ok(rows)
}
