//! Cycle transversals on small graphs: exact oracles, algorithms for
//! cographs and (sP1+P3)-free graphs, and a hardness reduction for odd
//! cycle transversal.

pub mod cograph;
pub mod dispatch;
pub mod error;
pub mod genio;
pub mod graph;
pub mod oracle;
pub mod pattern;
pub mod reduction;
pub mod set;
pub mod solution;
pub mod sp1p3;
pub mod suites;

pub use error::{Error, Result};
pub use graph::{Bipartition, CycleParity, Graph, Problem, Target, Violation};
pub use pattern::{InducedCopy, LinearForestPattern};
pub use set::VertexSet;
pub use solution::TransversalSolution;
