use std::cmp::Ordering;

use crate::graph::{Graph, Problem, Violation};
use crate::set::VertexSet;

/// A vertex set together with the problem it solves.
///
/// For transversal tags the objective is minimized; for `Mis`,
/// `MaxInducedForest` and `MaxInducedBipartite` it is maximized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TransversalSolution {
    pub problem: Problem,
    pub vertices: VertexSet,
}

impl TransversalSolution {
    pub fn new(problem: Problem, vertices: VertexSet) -> Self {
        TransversalSolution { problem, vertices }
    }

    pub fn objective(&self) -> usize {
        self.vertices.len()
    }

    /// `w` is the required set for transversals and the forbidden set for
    /// the maximization tags.
    pub fn validate(&self, g: &Graph, w: VertexSet) -> Result<(), Violation> {
        g.validate_solution(self.problem, self.vertices, w)
    }

    /// The same partition seen from the other side: a minimum FVS becomes a
    /// maximum induced forest and so on. Connectivity of the transversal is
    /// not carried over into the maximization tag.
    pub fn complement_in(&self, g: &Graph) -> TransversalSolution {
        let problem = match self.problem {
            Problem::Vc | Problem::CvcExt => Problem::Mis,
            Problem::Fvs | Problem::CfvsExt => Problem::MaxInducedForest,
            Problem::Oct | Problem::CoctExt => Problem::MaxInducedBipartite,
            Problem::Mis => Problem::Vc,
            Problem::MaxInducedForest => Problem::Fvs,
            Problem::MaxInducedBipartite => Problem::Oct,
        };
        TransversalSolution::new(problem, g.vertices() - self.vertices)
    }
}

/// Order used to pick among optimal candidates: smaller size first, then the
/// lexicographically smaller vertex set.
pub(crate) fn transversal_order(a: VertexSet, b: VertexSet) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(&b))
}

/// Keeps the best transversal seen so far under [`transversal_order`].
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Incumbent {
    pub best: Option<VertexSet>,
}

impl Incumbent {
    pub fn offer(&mut self, s: VertexSet) -> bool {
        match self.best {
            Some(b) if transversal_order(s, b) != Ordering::Less => false,
            _ => {
                self.best = Some(s);
                true
            }
        }
    }

    /// Size of the current best, or `usize::MAX`.
    pub fn size(&self) -> usize {
        self.best.map_or(usize::MAX, VertexSet::len)
    }
}
