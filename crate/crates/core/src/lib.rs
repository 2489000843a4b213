//! Transfinite ordinal length of modules presented by monomial ideals.
//!
//! The crate computes fundamental cycles, ordinal lengths, dimension
//! filtrations, binary/univalent classification and multiplication
//! endomorphism data for subquotients `I/J` of a polynomial ring, and ships
//! brute-force oracles (finite modules over F₂, a symbolic endomorphism
//! fixture) together with the property sweeps that cross-check them.

pub mod checks;
pub mod corpus;
pub mod cycle;
pub mod error;
pub mod module;
pub mod monomial;
pub mod oracle;
pub mod ordinal;
pub mod vars;

pub use cycle::{Cycle, MonomialPrime};
pub use error::{Error, Result};
pub use module::{EndoAnalysis, ModuleProfile, MonomialModule};
pub use monomial::{Monomial, MonomialIdeal, StandardPair};
pub use ordinal::Ordinal;
