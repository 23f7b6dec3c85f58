use num::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{factor_rational, partial_fractions, rational_roots, Factored, Poly, RatFunc, Rational};
use crate::quasi::{oscillator_potential, second_log_derivative, wronskian, QuasiFunction, SeedSpec};

/// `U(x; g) − 2 (log W)″`, kept together with the generating Wronskian.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Potential {
    #[serde(serialize_with = "ser_rational")]
    pub base_g: Rational,
    pub log_term: QuasiFunction,
    /// The potential as a rational function of η.
    pub rational: RatFunc,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    crate::exact::rational::to_json(r).serialize(s)
}

pub fn deformed_potential(base_g: &Rational, seeds: &[SeedSpec]) -> Result<Potential> {
    let fs: Vec<QuasiFunction> = seeds.iter().map(|s| s.solution(base_g)).collect();
    Potential::from_wronskian(base_g, wronskian(&fs))
}

impl Potential {
    pub fn from_wronskian(base_g: &Rational, w: QuasiFunction) -> Result<Self> {
        if w.is_zero() {
            return Err(Error::DependentSeeds);
        }
        let rational =
            oscillator_potential(base_g) - second_log_derivative(&w.log_derivative_eta()).scale(&Rational::from_integer(2.into()));
        Ok(Potential { base_g: base_g.clone(), log_term: w, rational })
    }

    /// Exact equality with a rational function of η.
    pub fn equals(&self, other: &RatFunc) -> bool {
        self.rational == *other
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.rational.eval_f64(x * x)
    }

    pub fn parts(&self) -> Result<PotentialParts> {
        PotentialParts::of(&self.rational)
    }
}

/// A potential split as `poly(η) + c/η + Σ Nᵢ/fᵢ^{eᵢ}`, one term per
/// distinct factor `fᵢ` of the denominator other than η.
#[derive(Clone, Debug, PartialEq)]
pub struct PotentialParts {
    pub polynomial: Poly,
    pub inverse_eta: Rational,
    /// `(Nᵢ, fᵢ, eᵢ)` with `deg Nᵢ < eᵢ·deg fᵢ`, `fᵢ` primitive.
    pub pieces: Vec<(Poly, Poly, usize)>,
}

impl PotentialParts {
    pub fn of(r: &RatFunc) -> Result<Self> {
        let k = r.den.low_order();
        if k > 1 {
            return Err(Error::Incompatible(format!("pole of order {k} at η = 0")));
        }
        let rest = r.den.unshift(k);
        let grouped: Vec<(Poly, usize)> = if rest.is_one() {
            vec![]
        } else {
            let f: Factored = factor_rational(&rest)?;
            f.factors
        };
        let mut dens: Vec<Poly> = grouped.iter().map(|(f, e)| f.pow(*e as u32)).collect();
        if k == 1 {
            dens.insert(0, Poly::var());
        }
        // the factored form drops the constant of `rest`, so rescale
        let scale = rest.leading().unwrap() / dens.iter().skip(k).fold(Poly::one(), |a, d| a * d.clone()).leading().unwrap();
        let (polynomial, parts) = partial_fractions(&r.num.scale(&scale.recip()), &dens)?;
        let mut parts = parts.into_iter();
        let inverse_eta = if k == 1 { parts.next().unwrap().coeff(0) } else { Rational::zero() };
        let pieces = grouped.into_iter().zip(parts).map(|((f, e), n)| (n, f, e)).collect();
        Ok(PotentialParts { polynomial, inverse_eta, pieces })
    }

    /// The part beyond `η + c/η + const`, as a rational function.
    pub fn deformation(&self) -> RatFunc {
        self.pieces
            .iter()
            .fold(RatFunc::constant(Rational::zero()), |acc, (n, f, e)| acc + RatFunc::new(n.clone(), f.pow(*e as u32)))
    }

    pub fn constant(&self) -> Rational {
        self.polynomial.coeff(0)
    }

    /// The deformation written in x, one summand per factor.
    pub fn render_deformation(&self) -> String {
        let terms: Vec<String> = self
            .pieces
            .iter()
            .map(|(n, f, e)| {
                let num = match factor_rational(n) {
                    Ok(fac) => fac.render_x(),
                    Err(_) => "0".into(),
                };
                let den = Factored { constant: Rational::one(), factors: vec![(f.clone(), *e)] }.render_x();
                format!("{num}/{den}")
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }
}

/// Nonzero rational roots of the Wronskian's polynomial part.
pub fn wronskian_roots(w: &QuasiFunction) -> Result<Vec<(Rational, usize)>> {
    rational_roots(w.poly())
}
