//! Reduced Hochschild chains `C_n(A,N) = N ⊗ A^{⊗n}` and cochains
//! `C^m(A,M) = Hom_k(A^{⊗m}, M)`, their differentials, (co)homology, the
//! degree-0 identifications and the action of the center.

mod chains;
mod complex;
mod homology;

pub use chains::{chain_dim, ChainVector, CochainMap};
pub use complex::{
    balanced_relations, chain_boundary_matrix, chain_pushforward, cochain_codifferential_matrix, cochain_pushforward,
    unreduced_boundary, unreduced_to_reduced,
};
pub use homology::{cohomology, homology, phi_iso, psi_iso, z_action, z_action_matrix, HomologyClass, HomologySpace, Variance};
