//! Exact scalars and polynomial algebra in one and two variables.

pub mod factor;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod resultant;
pub mod roots;

pub use factor::{factor_rational, partial_fractions, render_x, Factored};
pub use poly::{Coefficient, GPoly, Poly};
pub use ratfunc::RatFunc;
pub use rational::{int, rat, Rational};
pub use resultant::{discriminant, resultant};
pub use roots::{count_real_roots, rational_roots, Point};

/// Largest `m` with `(η − η0)^m | p`.
pub fn root_multiplicity(p: &Poly, eta0: &Rational) -> usize {
    p.root_multiplicity(eta0)
}
