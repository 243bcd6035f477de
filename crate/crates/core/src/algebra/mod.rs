//! Structure tensors, the GL(n) action and classical invariants.

mod action;
mod construct;
mod invariants;
pub mod io;
mod tensor;

pub use action::{act, inf_act, GroupElement};
pub(crate) use action::{act_with, inf_act_unchecked};
pub use construct::{adjoin_unit, direct_product, regular_representation, trivial};
pub use invariants::{
    annihilator, associator_defect, centroid_dim, derivation_algebra, find_unit, flags, is_associative,
    is_decomposable, is_jordan, is_semisimple, is_simple, jordan_defect, power_dims, product_rank, radical,
    trace_form, DerivationAlgebra, Flags, PowerChain, Subspace, RANK_TOL,
};
pub(crate) use invariants::{inf_act_matrix, unvec, vec_of};
pub use tensor::StructureTensor;
