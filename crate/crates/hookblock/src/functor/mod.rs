//! Concrete realizations of strict polynomial functors evaluated at k^n:
//! monomial bases, equivariant structure through divided-power generator
//! actions, the canonical Koszul and de Rham maps, the Schur / Weyl / simple
//! constructions, Kuhn duality, and an equivariant Hom-space solver.

pub mod build;
pub mod hom;
pub mod lab;
pub mod module;
pub mod word;

pub use build::{schur_dim, schur_module_def, simple_module_def, weyl_module_def};
pub use hom::{express_in_basis, hom_basis};
pub use lab::Lab;
pub use module::{gens_for, module_from_span, Gen, LinMap, PfModule, SparseSpan};
pub use word::{Factor, WordSpace};

use crate::error::Result;
use crate::partition::Prime;
use std::sync::Arc;

/// Evaluates a formal tensor word at k^n as an explicit module.
pub fn eval_space(p: Prime, n: usize, factors: Vec<Factor>) -> Result<Arc<PfModule>> {
    let label: Vec<String> = factors
        .iter()
        .map(|f| match f {
            Factor::Sym(a) => format!("Sym({})", a),
            Factor::Ext(a) => format!("Ext({})", a),
            Factor::Div(a) => format!("Div({})", a),
            Factor::Tens(a) => format!("Tens({})", a),
        })
        .collect();
    let ws = WordSpace::new(p.get(), n, factors)?;
    Ok(PfModule::from_word(&ws, label.join("*")))
}
