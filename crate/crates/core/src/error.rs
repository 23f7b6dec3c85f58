use thiserror::Error;

use crate::darboux::CaseName;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An exact division left a nonzero remainder, rendered in the
    /// dividend's variables.
    #[error("division is not exact, remainder {remainder}")]
    Division { remainder: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("polynomial degree {degree} is too low (need at least {required})")]
    DegreeTooLow { degree: usize, required: usize },

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("seed solutions are linearly dependent (Wronskian vanishes identically)")]
    DependentSeeds,

    #[error("index n={n} is missing from the family of case {case}")]
    IndexMissing { case: CaseName, n: i64 },

    #[error("index n={n} is not a member of the family of case {case}")]
    InvalidIndex { case: CaseName, n: i64 },

    #[error("operation not supported for case {case}: {what}")]
    UnsupportedCase { case: CaseName, what: &'static str },

    #[error("case {0} has no square-integrable family")]
    NotSquareIntegrable(CaseName),

    #[error("case {0} has no recorded prepotential")]
    NoPrepotential(CaseName),

    #[error("argument {0} is outside the domain")]
    Domain(f64),

    #[error("quasi-functions with incompatible prefactors cannot be added: {0}")]
    Incompatible(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
