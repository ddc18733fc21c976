//! Exact computation of resolving sets, doubly resolving sets and doubly
//! distance resolving sets, with closed-form support for Hamming graphs,
//! hypercubes and folded hypercubes, the coin-weighing correspondence on
//! hypercubes, and the 3-dimensional-matching gadget graphs.

pub mod coinweigh;
pub mod error;
pub mod families;
pub mod gadget;
pub mod graph;
pub mod resolving;
pub mod solver;

pub use error::{Error, Result};
pub use families::Family;
pub use graph::{Graph, Metric, VertexId};
pub use resolving::{LandmarkSet, Verdict};
