//! Darboux–Crum transformations of the radial oscillator: the case
//! catalog, deformed potentials, solution families and their norms, and the
//! search for Wronskians with multiple zeros.

mod case;
pub mod export;
mod norm;
mod potential;
mod search;
mod singular;
mod solution;
mod table;

pub use case::{
    catalog, family_indices, CaseName, CaseSpec, DirectFormula, ExtraMember, Family, GenericDisplay, NormFormula,
    Partner, PolyOde, Weight,
};
pub use norm::{factorial, pochhammer, predicted_norm, printed_norm_factor, NormRecord};
pub use potential::{deformed_potential, wronskian_roots, Potential, PotentialParts};
pub use search::{candidate_couplings, degree_tuples, generic_wronskian, search_multiple_zeros, SearchHit};
pub use singular::{apparent_singularities, exponents_for, is_triangular, singularity_exponents, Exponents, SingularityReport};
pub use solution::{direct_polynomial, quotient_solution, solution_quasi, transformed_solution, wronskian_quotient, GlobalSolution};
pub use table::{derived_weight, summary_table, weight_text, wronskian_text, TableRow};
