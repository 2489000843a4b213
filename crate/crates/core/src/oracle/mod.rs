//! Brute-force oracles: finite modules over F₂ and the endomorphism fixture
//! of `(x, y)` over `K[x, y]/(x², xy)`.

pub mod finite;
pub mod fixture;
pub mod theorems;

pub use finite::{FiniteModule, Matrix, Subspace};
pub use fixture::{EndoClass, EndoTriple, KernelShape};
