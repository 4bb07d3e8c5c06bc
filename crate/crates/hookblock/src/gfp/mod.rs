//! Exact linear algebra over prime fields: the computational substrate for
//! every oracle computation in this crate. No floating point anywhere.

mod matrix;
mod subspace;

pub use matrix::{inv_mod, pow_mod, FpMatrix, Rref};
pub use subspace::Subspace;
