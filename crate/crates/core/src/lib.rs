//! Local complementation (LC) orbits of simple graphs, studied through split
//! decompositions.
//!
//! The crate provides labeled graphs and LC sequences ([`graph`]), the named
//! graph families ([`families`]), a brute-force orbit oracle ([`orbit`]),
//! quotient-augmented strong split trees ([`split`], [`qasst_ops`]), exact
//! closed-form counts ([`counting`]) and the symmetry classes of the complete
//! k-partite and clique-star orbits ([`symmetry`]). [`verify`] cross-checks
//! the formulas against the oracle.

pub mod counting;
pub mod error;
pub mod families;
pub mod graph;
pub mod orbit;
pub mod qasst_ops;
pub mod split;
pub mod symmetry;
pub mod verify;

pub use error::{Error, Result};
pub use families::{FamilySpec, OrbitTag};
pub use graph::{LcSequence, SimpleGraph, VertexId};
pub use split::Qasst;

/// Machine-width exact count used by default.
pub type Count = i128;

/// Arbitrary-precision count for values beyond `i128`.
pub type BigCount = num_bigint::BigInt;
