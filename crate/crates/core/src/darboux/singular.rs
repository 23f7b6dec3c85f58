use std::fmt;

use serde::Serialize;

use crate::exact::{rat, rational_roots, Rational};
use crate::quasi::QuasiFunction;
use crate::Result;

/// Roots of `ρ(ρ − 1) = 2m`, i.e. `ρ = (1 ± √(1 + 8m))/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Exponents {
    Rational(Rational, Rational),
    /// `(1 ± √radicand)/2` with a non-square radicand.
    Surd { radicand: u64 },
}

impl fmt::Display for Exponents {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponents::Rational(a, b) => write!(f, "({a}, {b})"),
            Exponents::Surd { radicand } => write!(f, "((1-√{radicand})/2, (1+√{radicand})/2)"),
        }
    }
}

impl Serialize for Exponents {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_string().serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityReport {
    #[serde(serialize_with = "crate::darboux::export::ser_rational")]
    pub eta0: Rational,
    pub m: usize,
    pub exponents: Exponents,
    pub trivial_monodromy: bool,
}

pub fn exponents_for(m: usize) -> (Exponents, bool) {
    let radicand = 1 + 8 * m as u64;
    let r = radicand.isqrt();
    if r * r == radicand {
        let r = r as i64;
        // 1 + 8m is odd, so a square root of it is odd too
        (Exponents::Rational(rat(1 - r, 2), rat(1 + r, 2)), r % 2 == 1)
    } else {
        (Exponents::Surd { radicand }, false)
    }
}

pub fn singularity_exponents(w: &QuasiFunction, eta0: &Rational) -> SingularityReport {
    assert!(!w.is_zero(), "singularity analysis of a vanishing Wronskian");
    let m = w.poly().root_multiplicity(eta0);
    let (exponents, trivial_monodromy) = exponents_for(m);
    SingularityReport { eta0: eta0.clone(), m, exponents, trivial_monodromy }
}

/// One report per rational root of the polynomial part, by increasing root.
pub fn apparent_singularities(w: &QuasiFunction) -> Result<Vec<SingularityReport>> {
    Ok(rational_roots(w.poly())?.into_iter().map(|(r, _)| singularity_exponents(w, &r)).collect())
}

pub fn is_triangular(m: usize) -> bool {
    exponents_for(m).1
}
