//! JSON views of catalog records.

use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use super::case::{CaseSpec, Weight};
use crate::exact::rational::to_json;
use crate::exact::{Poly, RatFunc, Rational};

pub fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    to_json(r).serialize(s)
}

pub fn ser_opt_rational<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    r.as_ref().map(to_json).serialize(s)
}

pub fn poly_json(p: &Poly) -> Value {
    json!({ "coeffs": p, "text": p.render(&["η"]) })
}

pub fn ratfunc_json(r: &RatFunc) -> Value {
    json!({ "num": poly_json(&r.num), "den": poly_json(&r.den) })
}

fn weight_json(w: &Weight) -> Value {
    json!({
        "eta_exponent": to_json(&w.exponent),
        "denominator": poly_json(&w.denominator),
        "constant": to_json(&w.constant),
    })
}

pub fn case_json(c: &CaseSpec) -> Value {
    let family = c.family.as_ref().map(|f| {
        json!({
            "eta_power": to_json(&f.eta_power),
            "denominator": poly_json(&f.denominator),
            "degree_offset": f.degree_offset,
            "missing_indices": f.missing,
            "extra_members": f.extras.iter().map(|e| json!({
                "n": e.n, "poly": poly_json(&e.poly), "energy": to_json(&e.energy),
            })).collect::<Vec<_>>(),
            "weight": f.weight.as_ref().map(weight_json),
            "norm_formula": f.norm.as_ref().map(|n| json!({
                "poly_in_n": poly_json(&n.poly),
                "gamma_shift": to_json(&n.gamma_shift),
                "form": "poly(n)·Γ(n + gamma_shift)/n!",
            })),
            "prepotential_shift": f.prepotential.as_ref().map(|(_, s)| to_json(s)),
        })
    });
    json!({
        "name": c.name,
        "seeds": c.seeds.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "g": to_json(&c.g),
        "wronskian": c.expected_wronskian,
        "wronskian_text": c.expected_wronskian.to_string(),
        "potential": ratfunc_json(&c.expected_potential),
        "family": family,
    })
}

pub fn catalog_json() -> Value {
    Value::Array(super::catalog().iter().map(case_json).collect())
}
