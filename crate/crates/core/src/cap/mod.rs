//! The cap product: the diagonal of the bar resolution, the chain formula
//! with its homology-level pairing, and the product `∩̃` defined through
//! chain-map lifts of cocycles.

mod diagonal;
mod lift;
mod product;

pub use diagonal::{
    check_diagonal_axioms, check_reordered_identity, diagonal, reduced_diagonal, reduced_first_differential,
    reduced_second_differential, DiagonalMap,
};
pub use lift::{cap_via_lift, coboundary_lift, explicit_lift, solve_lift, ChainMapLift};
pub use product::{cap_chain, cap_homology, cap_table, CapProduct, CapTable};
