//! Exact homological computations for the principal block of degree-p
//! strict polynomial functors over a field of characteristic p, and for all
//! blocks of p-weight one.
//!
//! Two independent routes to every answer:
//!
//! * **Closed forms** ([`closed`]): the Ext tables between simple, Schur
//!   (costandard) and Weyl (standard) functors labelled by hooks, the
//!   decomposition matrix, Kazhdan-Lusztig parity, and finite models of the
//!   Yoneda algebras of Schur and simple functors.
//! * **A brute-force oracle** ([`functor`], [`complex`]): polynomial functors
//!   evaluated on a vector space realized as explicit modules over the prime
//!   field, Koszul and de Rham differentials, injective and projective
//!   resolutions, and Ext groups computed by exact linear algebra.
//!
//! The combinatorial layer ([`partition`], [`abacus`], [`tableaux`],
//! [`blockmap`]) classifies blocks by p-cores and transports the hook-block
//! answers to every block of p-weight one.
//!
//! See the `book/` directory for a guided tour; its code snippets run as
//! doc-tests of this crate.

pub mod abacus;
pub mod blockmap;
pub mod closed;
pub mod complex;
pub mod error;
pub mod functor;
pub mod gfp;
pub mod partition;
pub mod report;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{Partition, Prime};

// The book chapters double as doc-tests: every fenced Rust block in
// book/src runs against the public API, so the guide cannot drift.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:expr) => {
            #[doc = include_str!($path)]
            pub struct $name;
        };
    }
    chapter!(Introduction, "../../../book/src/introduction.md");
    chapter!(Partitions, "../../../book/src/partitions.md");
    chapter!(LittlewoodRichardson, "../../../book/src/littlewood-richardson.md");
    chapter!(LinearAlgebra, "../../../book/src/linear-algebra.md");
    chapter!(FunctorLab, "../../../book/src/functor-lab.md");
    chapter!(Complexes, "../../../book/src/complexes.md");
    chapter!(Yoneda, "../../../book/src/yoneda.md");
    chapter!(Blocks, "../../../book/src/blocks.md");
    chapter!(Cli, "../../../book/src/cli.md");
}
