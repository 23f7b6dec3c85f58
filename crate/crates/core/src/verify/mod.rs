//! Exact residual checks of every identity in the catalog, and quadrature
//! checks of orthogonality and norms.

mod quadrature;
mod residual;
mod suite;

pub use quadrature::{
    check_orthogonality, expected_norm, gamma_numeric, integrate_rational, orthogonality, tail_bound, weight_positive,
    OrthogonalityCheck, QuadratureResult, NODES,
};
pub use residual::{
    apply_poly_ode, check_eta_ode, check_eta_ode_with, check_member_schrodinger, check_partner_against,
    check_partner_potential, check_polynomial_ode, check_prepotential, check_schrodinger, derived_eta_ode,
    derived_poly_ode, ResidualReport,
};
pub use suite::{apply_override, run_suite, run_suite_on, CheckEntry, Override, SuiteReport};
