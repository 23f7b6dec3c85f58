//! Exact construction and verification of multi-indexed Laguerre systems
//! obtained from the radial oscillator by Darboux–Crum transformations.

pub mod darboux;
pub mod error;
pub mod exact;
pub mod quasi;
pub mod verify;

pub use error::{Error, Result};
