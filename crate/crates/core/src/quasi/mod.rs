//! The function ring `e^{c·x²/2} x^p P(x²)`: eigenfunctions, seed solutions,
//! Wronskians and their quotients.

pub mod function;
pub mod ratio;
pub mod seed;
pub mod wronskian;

pub use function::QuasiFunction;
pub use ratio::{riccati_difference, riccati_sum, schrodinger_defect, second_log_derivative, RationalQuasi};
pub use seed::{
    eigen_energy, eigenfunction, laguerre, oscillator_potential, seed_energy, seed_solution, SeedKind, SeedSpec,
};
pub use wronskian::wronskian;
