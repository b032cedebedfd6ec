//! Fully dynamic reachability (transitive closure) for directed graphs.
//!
//! The oracle supports edge-set insertions centered at a vertex, arbitrary
//! edge-set deletions, and O(1) boolean reachability queries. Internally it
//! keeps a versioned edge store, a pair of decremental reachability trees
//! per insertion center, and a matrix counting how many centers witness each
//! vertex pair; a query is a positivity test on one matrix cell.
//!
//! The `reference` module provides brute-force recomputation oracles used
//! for differential testing and by the CLI's checked mode.

#![forbid(unsafe_code)]

pub mod error;
pub mod oracle;
pub mod reference;
pub mod store;
pub mod tcm;
pub mod tree;

pub use error::{Error, Result};
pub use oracle::{CenterCounters, CenterRecord, CounterReport, DynamicOracle};
pub use store::{EdgeRecord, EdgeView, Orientation, VersionedEdgeStore, VertexId};
pub use tcm::WitnessMatrix;
pub use tree::{DeltaReport, Direction, ReachTree};
