//! Exact reference solvers, the subroutine interface used by the
//! specialized algorithms, and the connected vertex cover extension
//! pipeline for (sP1+P5)-free graphs.
//!
//! Two engines are available for feedback vertex set and odd cycle
//! transversal: plain subset enumeration ([`Engine::Subsets`]) and cycle
//! branching ([`Engine::BranchAndBound`]). Connected variants grow connected
//! sets from an anchor instead of filtering all subsets.

pub mod bnb;
pub mod connected;
pub mod exact;
pub mod mis;
pub mod pipeline;
pub mod subroutines;

pub use bnb::Limits;
pub use pipeline::{
    connected_dominating_set_smallish, cvc_extension_pipeline, cvc_extension_pipeline_report,
    reduce_by_double_neighbors, PipelineReport,
    CoverCompleteTriple, DoubleNeighborReduction,
};
pub use subroutines::{ExactSubroutines, Subroutines};

use crate::error::{Error, Result};
use crate::graph::{Graph, Problem, Target};
use crate::set::VertexSet;
use crate::solution::TransversalSolution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Subsets,
    BranchAndBound,
}

/// Panics if `s` is not a valid solution; callers only pass sets they
/// believe valid, so a failure here is a bug.
pub(crate) fn checked(g: &Graph, problem: Problem, s: VertexSet, w: VertexSet) -> TransversalSolution {
    if let Err(v) = g.validate_solution(problem, s, w) {
        panic!("internal error: {problem} solution {s} rejected on {g:?}: {v}");
    }
    TransversalSolution::new(problem, s)
}

pub fn max_independent_set(g: &Graph) -> TransversalSolution {
    let s = mis::max_independent_set_within(g, g.vertices());
    checked(g, Problem::Mis, s, VertexSet::EMPTY)
}

pub fn min_vertex_cover(g: &Graph) -> TransversalSolution {
    let s = g.vertices() - mis::max_independent_set_within(g, g.vertices());
    checked(g, Problem::Vc, s, VertexSet::EMPTY)
}

/// Maximum independent set as the best of `1 + inner(G - N[v])` over all
/// vertices `v`, or the empty set. `inner` receives the vertex mask of the
/// subgraph to solve.
pub fn mis_p1_boost(g: &Graph, inner: &dyn Fn(&Graph, VertexSet) -> VertexSet) -> TransversalSolution {
    let s = mis::mis_p1_boost_within(g, g.vertices(), inner);
    checked(g, Problem::Mis, s, VertexSet::EMPTY)
}

pub fn min_fvs(g: &Graph) -> TransversalSolution {
    min_transversal(g, Target::Forest, Engine::BranchAndBound)
}

pub fn min_oct(g: &Graph) -> TransversalSolution {
    min_transversal(g, Target::Bipartite, Engine::BranchAndBound)
}

/// Minimum transversal of the given kind. Vertex cover always uses the
/// independent set search; `engine` selects the method for cycles.
pub fn min_transversal(g: &Graph, target: Target, engine: Engine) -> TransversalSolution {
    let s = min_transversal_within(g, target, g.vertices(), engine);
    checked(g, Problem::transversal(target, false), s, VertexSet::EMPTY)
}

pub(crate) fn min_transversal_within(
    g: &Graph,
    target: Target,
    within: VertexSet,
    engine: Engine,
) -> VertexSet {
    match (target, engine) {
        (Target::Edgeless, Engine::BranchAndBound) => {
            within - mis::max_independent_set_within(g, within)
        }
        (_, Engine::Subsets) => exact::min_transversal_subsets(g, target, within, VertexSet::EMPTY),
        (_, Engine::BranchAndBound) => bnb::min_cycle_transversal(g, target, within),
    }
}

/// Smallest transversal of the kind given by `problem` that contains `w`,
/// and induces a connected subgraph when `connected` is set.
///
/// Without connectivity this is `w` plus a minimum transversal of `G - w`.
/// With it, connected sets containing `w` are searched exhaustively, and
/// `Error::Infeasible` is returned if none works.
pub fn min_extension(problem: Problem, g: &Graph, w: VertexSet, connected: bool) -> Result<TransversalSolution> {
    g.check_set(w)?;
    if problem.is_maximization() {
        return Err(Error::Precondition(format!(
            "{problem} is a maximization problem, not a transversal"
        )));
    }
    let target = problem.target();
    let tag = Problem::transversal(target, connected);
    let s = if connected {
        connected::min_connected_transversal(g, target, g.vertices(), w).ok_or_else(|| {
            Error::Infeasible(format!("no connected {} contains {w}", tag.name()))
        })?
    } else {
        w | min_transversal_within(g, target, g.vertices() - w, Engine::BranchAndBound)
    };
    Ok(checked(g, tag, s, w))
}

/// Largest induced forest avoiding `forbidden`, optionally with connected
/// complement.
pub fn max_induced_forest(
    g: &Graph,
    forbidden: VertexSet,
    require_complement_connected: bool,
) -> Result<TransversalSolution> {
    max_induced(g, Target::Forest, forbidden, require_complement_connected)
}

/// Largest induced bipartite subgraph avoiding `forbidden`, optionally with
/// connected complement.
pub fn max_induced_bipartite(
    g: &Graph,
    forbidden: VertexSet,
    require_complement_connected: bool,
) -> Result<TransversalSolution> {
    max_induced(g, Target::Bipartite, forbidden, require_complement_connected)
}

fn max_induced(
    g: &Graph,
    target: Target,
    forbidden: VertexSet,
    complement_connected: bool,
) -> Result<TransversalSolution> {
    let problem = match target {
        Target::Forest => Problem::MaxInducedForest,
        Target::Bipartite => Problem::MaxInducedBipartite,
        Target::Edgeless => Problem::Mis,
    };
    let t = min_extension(Problem::transversal(target, false), g, forbidden, complement_connected)?;
    Ok(checked(g, problem, g.vertices() - t.vertices, forbidden))
}

/// Reduces a connected-transversal instance to a single component.
///
/// Components that meet `w` or do not already have the target property
/// need a solution vertex. A connected solution fits in one component, so
/// with two or more such components the instance is infeasible; with none
/// the empty set is optimal (`Ok(None)`); with one, solving on that
/// component suffices (`Ok(Some(component))`).
pub fn relevant_component(g: &Graph, target: Target, w: VertexSet) -> Result<Option<VertexSet>> {
    g.check_set(w)?;
    let needy: Vec<VertexSet> = g
        .connected_components()
        .into_iter()
        .filter(|&c| c.intersects(w) || !g.satisfies_within(target, c))
        .collect();
    match needy.as_slice() {
        [] => Ok(None),
        [c] => Ok(Some(*c)),
        _ => Err(Error::Infeasible(format!(
            "{} components need solution vertices but a connected solution meets only one",
            needy.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_slice(v)
    }

    #[test]
    fn cover_and_independent_set() {
        assert_eq!(min_vertex_cover(&complete(3)).objective(), 2);
        assert_eq!(max_independent_set(&complete(3)).objective(), 1);
        assert_eq!(max_independent_set(&cycle(5)).objective(), 2);
        assert_eq!(min_vertex_cover(&cycle(5)).objective(), 3);
        assert_eq!(max_independent_set(&petersen()).objective(), 4);
    }

    #[test]
    fn boost_examples() {
        assert_eq!(mis_p1_boost(&path(1), &mis::max_independent_set_within).objective(), 1);
        let g = disjoint_union(&complete(3), &complete(3));
        assert_eq!(mis_p1_boost(&g, &mis::max_independent_set_within).objective(), 2);
    }

    #[test]
    fn cycle_transversals() {
        assert_eq!(min_fvs(&complete(4)).objective(), 2);
        assert_eq!(min_fvs(&cycle(4)).objective(), 1);
        assert_eq!(min_oct(&cycle(4)).objective(), 0);
        let p = petersen();
        assert_eq!(min_fvs(&p).objective(), 3);
        assert_eq!(min_transversal(&p, Target::Forest, Engine::Subsets).objective(), 3);
    }

    #[test]
    fn extension_examples() {
        let s = min_extension(Problem::Oct, &cycle(5), set(&[0]), true).unwrap();
        assert_eq!(s.vertices, set(&[0]));
        let s = min_extension(Problem::Fvs, &cycle(4), set(&[0, 2]), true).unwrap();
        assert_eq!(s.objective(), 3);
        let g = petersen();
        let s = min_extension(Problem::Vc, &g, VertexSet::EMPTY, false).unwrap();
        assert_eq!(s.objective(), min_vertex_cover(&g).objective());
        let two = disjoint_union(&cycle(3), &cycle(3));
        let err = min_extension(Problem::Fvs, &two, VertexSet::EMPTY, true).unwrap_err();
        assert!(err.is_infeasible());
    }

    #[test]
    fn induced_subgraph_maxima() {
        assert_eq!(max_induced_forest(&complete(4), VertexSet::EMPTY, false).unwrap().objective(), 2);
        assert_eq!(max_induced_bipartite(&cycle(4), VertexSet::EMPTY, false).unwrap().objective(), 4);
        // C6 with a connected complement: deleting a path of two vertices
        // leaves a P4, and deleting a single vertex leaves the P5 forest.
        let c6 = max_induced_forest(&cycle(6), VertexSet::EMPTY, true).unwrap();
        assert_eq!(c6.objective(), 5);
    }

    #[test]
    fn remark_one_preprocessing() {
        let g = disjoint_union(&cycle(3), &path(3));
        assert_eq!(relevant_component(&g, Target::Forest, VertexSet::EMPTY).unwrap(), Some(set(&[0, 1, 2])));
        assert_eq!(relevant_component(&g, Target::Bipartite, VertexSet::EMPTY).unwrap(), Some(set(&[0, 1, 2])));
        assert_eq!(relevant_component(&path(3), Target::Forest, VertexSet::EMPTY).unwrap(), None);
        assert!(relevant_component(&g, Target::Forest, set(&[4])).unwrap_err().is_infeasible());
    }
}
