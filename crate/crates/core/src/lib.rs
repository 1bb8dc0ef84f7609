//! Exact computation with k-uniform set families under matching-number and
//! clique-number constraints.
//!
//! The crate is organised bottom-up:
//!
//! * [`family_core`] holds bitmask families, ν/τ/ω with certificates, the
//!   shifting operators, shadows, lex segments and links.
//! * [`constructions`] builds the named extremal families.
//! * [`formulas`] evaluates the closed forms exactly.
//! * [`oracle`] computes `m` and `m*` by branch-and-bound over shifted families.
//! * [`verify`] and [`table`] drive property suites and comparison tables.
//!
//! With the default `parallel` feature the oracle splits its search tree and
//! the property suites fan out over rayon; disabling it gives a sequential
//! build with the same results.

pub mod constructions;
pub mod error;
pub mod family_core;
pub mod formulas;
pub mod oracle;
pub mod par;
pub mod random;
pub mod table;
pub mod verify;

pub use constructions::{cyclic_intervals, Construction};
pub use error::{Error, Result};
pub use family_core::{Edge, Family, InvariantReport, VertexSet};
