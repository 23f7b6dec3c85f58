use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use gauss_quad::GaussLaguerre;
use num::{Signed, Zero};
use serde::Serialize;

use crate::darboux::{predicted_norm, printed_norm_factor, transformed_solution, CaseName, CaseSpec, Weight};
use crate::error::{Error, Result};
use crate::exact::rational::to_f64;
use crate::exact::{count_real_roots, Point, Poly, Rational};

pub const NODES: usize = 128;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: f64,
    /// Difference from the rule with twice as many nodes.
    pub estimated_error: f64,
    pub nodes_used: usize,
    /// Bound on the integral beyond the largest node.
    pub tail_bound: f64,
}

pub fn gamma_numeric(z: f64) -> Result<f64> {
    if !(z.is_finite() && z > 0.0) {
        return Err(Error::Domain(z));
    }
    let v = statrs::function::gamma::gamma(z);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Domain(z))
    }
}

type RuleCache = Mutex<HashMap<(usize, u64), Arc<GaussLaguerre>>>;

fn rule(nodes: usize, alpha: f64) -> Arc<GaussLaguerre> {
    static CACHE: OnceLock<RuleCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (nodes, alpha.to_bits());
    if let Some(r) = cache.lock().unwrap().get(&key) {
        return r.clone();
    }
    let r = Arc::new(GaussLaguerre::new(nodes, alpha).expect("degree ≥ 2 and α > −1"));
    cache.lock().unwrap().insert(key, r.clone());
    r
}

fn abs_sum(p: &Poly) -> f64 {
    p.coeffs().iter().map(|c| to_f64(&c.abs())).sum()
}

/// Fujiwara's bound on the moduli of the roots.
fn root_bound(d: &Poly) -> f64 {
    let n = d.degree().unwrap_or(0);
    let lc = to_f64(&d.leading().unwrap().abs());
    (1..=n)
        .map(|k| {
            let c = to_f64(&d.coeff(n - k).abs()) / lc;
            let c = if k == n { c / 2.0 } else { c };
            c.powf(1.0 / k as f64)
        })
        .fold(0.0, f64::max)
        * 2.0
}

/// `∫_T^∞ e^{−η} η^s |c·P(η)/D(η)| dη`, bounded through `|P| ≤ Σ|pᵢ|·η^{deg P}`
/// and `|D| ≥ |lc D|·(1 − R/T)^{deg D}·η^{deg D}` for `η ≥ T ≥ 1`, R a root
/// bound of D.
pub fn tail_bound(s: f64, c: f64, p: &Poly, d: &Poly, t: f64) -> f64 {
    let t = t.max(1.0);
    let dd = d.degree().unwrap_or(0);
    let r = root_bound(d);
    if r >= t {
        return f64::INFINITY;
    }
    let m_d = to_f64(&d.leading().unwrap().abs()) * (1.0 - r / t).powi(dd as i32);
    let k = p.degree().unwrap_or(0) as f64 - dd as f64;
    let a = s + k + 1.0;
    let tail = if a > 0.0 {
        statrs::function::gamma::gamma_ur(a, t) * statrs::function::gamma::gamma(a)
    } else {
        // η^{a−1} ≤ T^{a−1} on [T, ∞)
        t.powf(a - 1.0) * (-t).exp()
    };
    (c.abs() * abs_sum(p) / m_d * tail).max(0.0)
}

/// `∫₀^∞ e^{−η} η^s · c · P(η)/D(η) dη` by Gauss–Laguerre with weight η^s.
pub fn integrate_rational(s: &Rational, c: &Rational, p: &Poly, d: &Poly) -> QuadratureResult {
    let alpha = to_f64(s);
    let c = to_f64(c);
    let f = |x: f64| c * p.eval_f64(x) / d.eval_f64(x);
    let coarse = rule(NODES, alpha);
    let fine = rule(2 * NODES, alpha);
    let value = coarse.integrate(f);
    let refined = fine.integrate(f);
    let last = coarse.nodes().copied().fold(0.0, f64::max);
    QuadratureResult {
        value,
        estimated_error: (value - refined).abs(),
        nodes_used: NODES,
        tail_bound: tail_bound(alpha, c, p, d, last),
    }
}

fn weight_of(case: &CaseSpec) -> Result<&Weight> {
    case.family
        .as_ref()
        .and_then(|f| f.weight.as_ref())
        .ok_or(Error::NotSquareIntegrable(case.name))
}

/// `∫₀^∞ weight(η) 𝓛ₙ 𝓛ₘ dη` with the weight as recorded for the case.
pub fn orthogonality(case: &CaseSpec, n: i64, m: i64) -> Result<QuadratureResult> {
    let w = weight_of(case)?;
    let ln = transformed_solution(case, n)?.numer;
    let lm = transformed_solution(case, m)?.numer;
    Ok(integrate_rational(&w.exponent, &w.constant, &(ln * lm), &w.denominator))
}

/// The closed-form `h_n`: the printed formula where there is one, the
/// predicted norm otherwise, and nothing for extra members.
pub fn expected_norm(case: &CaseSpec, n: i64) -> Result<Option<f64>> {
    weight_of(case)?;
    if let (Some(nf), Some(r)) = (case.family.as_ref().and_then(|f| f.norm.as_ref()), printed_norm_factor(case, n)) {
        return Ok(Some(to_f64(&r) * gamma_numeric(to_f64(&(Rational::from_integer(n.into()) + &nf.gamma_shift)))?));
    }
    let rec = predicted_norm(case, n)?;
    Ok(match rec.rational_factor {
        Some(r) => Some(to_f64(&r) * gamma_numeric(to_f64(&rec.gamma_arg))?),
        None => None,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrthogonalityCheck {
    pub case: CaseName,
    pub n: i64,
    pub m: i64,
    pub result: QuadratureResult,
    /// `h_n` on the diagonal when known, 0 off it.
    pub expected: Option<f64>,
    pub scale: f64,
    pub error: f64,
    pub passed: bool,
}

/// Off-diagonal entries are measured against `max(1, √(hₙ hₘ))` with the
/// diagonal taken from quadrature; diagonal ones against `max(1, hₙ)`.
pub fn check_orthogonality(case: &CaseSpec, n: i64, m: i64, tol: f64) -> Result<OrthogonalityCheck> {
    let result = orthogonality(case, n, m)?;
    let (expected, scale) = if n == m {
        let e = expected_norm(case, n)?;
        (e, e.unwrap_or(result.value).abs().max(1.0))
    } else {
        let hn = orthogonality(case, n, n)?.value;
        let hm = orthogonality(case, m, m)?.value;
        (Some(0.0), (hn * hm).abs().sqrt().max(1.0))
    };
    let error = match expected {
        Some(e) => (result.value - e).abs() / scale,
        None => result.estimated_error / scale,
    };
    let passed = error <= tol && result.tail_bound.is_finite() && result.estimated_error / scale <= tol;
    Ok(OrthogonalityCheck { case: case.name, n, m, result, expected, scale, error, passed })
}

/// The weight's denominator has no root on `[0, ∞)`, the constant and the
/// denominator's leading coefficient are positive, so the weight is
/// positive on `(0, ∞)`.
pub fn weight_positive(case: &CaseSpec) -> Result<bool> {
    let w = weight_of(case)?;
    let d = &w.denominator;
    let no_roots = d.eval(&Rational::zero()) != Rational::zero()
        && count_real_roots(d, &Point::At(Rational::zero()), &Point::PosInf) == 0;
    Ok(no_roots && d.leading().is_some_and(|l| l.is_positive()) && w.constant.is_positive())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn gamma_values() {
        assert!((gamma_numeric(1.0).unwrap() - 1.0).abs() < 1e-12);
        assert!((gamma_numeric(5.0).unwrap() - 24.0).abs() < 1e-12 * 24.0);
        let sqrt_pi = std::f64::consts::PI.sqrt();
        assert!((gamma_numeric(0.5).unwrap() - sqrt_pi).abs() < 1e-12 * sqrt_pi);
        assert_eq!(gamma_numeric(0.0), Err(Error::Domain(0.0)));
        assert_eq!(gamma_numeric(-1.5), Err(Error::Domain(-1.5)));
    }

    #[test]
    fn gamma_against_quadrature() {
        // ∫ e^{−t} t^{1/4} dt
        let q = integrate_rational(&rat(1, 4), &int(1), &Poly::from_ints(&[1]), &Poly::from_ints(&[1]));
        let g = gamma_numeric(1.25).unwrap();
        assert!((q.value - g).abs() < 1e-12 * g);
        assert!(q.tail_bound.is_finite());
    }

    #[test]
    fn tail_bounds_are_finite() {
        for name in [CaseName::A, CaseName::B, CaseName::E, CaseName::H] {
            let r = orthogonality(&name.spec(), 3, 3).unwrap();
            assert!(r.tail_bound.is_finite() && r.tail_bound >= 0.0, "case {name}: {r:?}");
        }
    }

    #[test]
    fn case_a_ground_norm() {
        let a = CaseName::A.spec();
        let c = check_orthogonality(&a, 0, 0, 1e-8).unwrap();
        assert!((c.expected.unwrap() - 104.0 * gamma_numeric(1.25).unwrap()).abs() < 1e-9);
        assert!(c.passed, "{c:?}");
        let off = check_orthogonality(&a, 0, 1, 1e-8).unwrap();
        assert!(off.passed, "{off:?}");
    }

    #[test]
    fn weights_are_positive() {
        for name in [CaseName::A, CaseName::B, CaseName::E, CaseName::H] {
            assert!(weight_positive(&name.spec()).unwrap(), "case {name}");
        }
        assert_eq!(weight_positive(&CaseName::D.spec()), Err(Error::NotSquareIntegrable(CaseName::D)));
    }
}
