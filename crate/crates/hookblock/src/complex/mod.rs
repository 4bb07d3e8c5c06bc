//! Chain complexes and double complexes of evaluated functors: homology,
//! the standard resolutions of the principal block, the Ext oracle, chain
//! maps with products and homotopy solving, and formality certificates.

pub mod chainmap;
pub mod ext;
pub mod resolutions;
pub mod types;

pub use chainmap::{ChainMap, Family, Yoneda};
pub use ext::{ext_oracle, object_module, ExtTable, ObjectKind};
pub use resolutions::{
    cartier_kernel_check, cokernel_identification, injectivity_audit, koszul_kernel_complex,
    proj_res_schur, proj_res_simple, proj_res_weyl, r_double, r_resolution, r_tot, t_complex,
    t_resolution, Resolution,
};
pub use types::{Complex, Diff, DoubleComplex, Part, SumTerm, VComplex};
