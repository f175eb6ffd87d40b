//! Edge-connectivity, strength, and k-edge-maximality for r-uniform
//! hypergraphs, with generators for the extremal families, the size-bound
//! formulas, and an exhaustive desk-scale search.
//!
//! Everything is exact integer combinatorics. Hypergraphs are immutable
//! values in a canonical form (sorted edges, sorted edge list), so equal
//! hypergraphs serialize to identical bytes; all operations are pure.

pub mod connectivity;
pub mod constructions;
pub mod error;
pub mod extremal;
mod flow;
pub mod hypergraph;
pub mod params;
pub mod search;

pub use error::{Error, Result};
pub use hypergraph::Hypergraph;
pub use params::{binom, threshold_t, Params};
