//! Exact topological indices of small graphs, and exhaustive checks of
//! extremal results for Eulerian, 2-edge-connected and 2-connected graphs.
//!
//! * [`graph`]: bitset graphs, distances, class tests, graph6 and edge lists.
//! * [`indices`]: Wiener, Harary, Zagreb and multiplicative Zagreb indices in
//!   exact arithmetic.
//! * [`constructions`]: cycles, complete graphs, bouquets and the `h`, `G1`,
//!   `G2` gadgets.
//! * [`enumeration`]: labelled and isomorphism-free class enumeration.
//! * [`verification`]: extremal scans and the theorem checks built on them.

pub mod cli;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod indices;
pub mod verification;

pub use error::{Error, Result};
pub use graph::Graph;
pub use indices::{IndexBundle, IndexKind, IndexValue, Rational};
