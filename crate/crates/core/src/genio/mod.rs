//! Graph input/output, exhaustive enumeration of small graphs and trees,
//! and seeded random generators for the graph classes used in testing.

pub mod edgelist;
pub mod enumerate;
pub mod graph6;
pub mod random;
pub mod trees;

pub use edgelist::{parse_edgelist, serialize_edgelist};
pub use enumerate::{enumerate_all_graphs, AllGraphs};
pub use graph6::{parse_graph6, serialize_graph6};
pub use random::{random_in_class, GeneratorSpec, GraphClass, SplitMix64};
pub use trees::{labeled_trees, prufer_decode, unlabeled_trees};
