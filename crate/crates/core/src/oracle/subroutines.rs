//! The two black-box subroutines the specialized algorithms call.

use crate::graph::{Graph, Target};
use crate::set::VertexSet;

use super::{connected, mis};

/// Maximum independent set and connected vertex cover extension, both on
/// an induced subgraph `G[within]`.
///
/// Implementations must return optimal, valid answers for every input they
/// accept. The specialized solvers only rely on this contract, so a faster
/// backend can be dropped in without touching them.
pub trait Subroutines: Sync {
    fn max_independent_set(&self, g: &Graph, within: VertexSet) -> VertexSet;

    /// A smallest connected vertex cover of `G[within]` containing
    /// `required`, or `None` if there is none.
    fn connected_vertex_cover_ext(
        &self,
        g: &Graph,
        within: VertexSet,
        required: VertexSet,
    ) -> Option<VertexSet>;

    /// A minimum vertex cover of `G[within]`.
    fn min_vertex_cover(&self, g: &Graph, within: VertexSet) -> VertexSet {
        within - self.max_independent_set(g, within)
    }
}

/// Exact exponential backend.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExactSubroutines;

impl Subroutines for ExactSubroutines {
    fn max_independent_set(&self, g: &Graph, within: VertexSet) -> VertexSet {
        mis::max_independent_set_within(g, within)
    }

    fn connected_vertex_cover_ext(
        &self,
        g: &Graph,
        within: VertexSet,
        required: VertexSet,
    ) -> Option<VertexSet> {
        connected::min_connected_transversal(g, Target::Edgeless, within, required)
    }
}
