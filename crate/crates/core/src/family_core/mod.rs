//! Canonical k-uniform families and their structural invariants.

mod family;
mod invariants;
pub mod json;
mod operators;
mod set;
mod shifting;

pub use family::Family;
pub use invariants::{
    clique_number, covering_number, find_matching_of_size, has_matching_of_size, intersection_predicates,
    is_cross_intersecting, is_t_intersecting, matching_number, max_matching_masks,
    IntersectionProfile, InvariantReport,
};
pub use operators::{binomial_u128, lex_family, link, link_within, restrict_avoid, shadow};
pub use set::{check_capacity, k_subsets, Edge, SubsetsOfSize, VertexSet, Vertices};
pub use shifting::{is_shifted, precedes, shift_closure, shift_ij};
