//! Connected vertex cover extension on (sP1+P5)-free graphs.
//!
//! The pipeline finds a small connected dominating set `D`, guesses the part
//! `D*` of `D` left out of the solution, forces everything the guess
//! implies, contracts the forced part to a single vertex `y` plus an
//! independent set, drops the vertices whose neighbourhood contains an edge,
//! and hands the resulting cover-complete triple to the completion
//! subroutine. Whenever an intermediate object fails its defining checks the
//! instance is solved by the oracle instead.

use crate::error::{Error, Result};
use crate::graph::{Graph, Problem, Target};
use crate::set::{for_each_subset_of_size, for_each_subset_up_to, VertexSet};
use crate::solution::{Incumbent, TransversalSolution};

use super::{checked, connected, Subroutines};

/// A graph with an independent set `j` and a vertex `y ∈ j` such that `y`
/// sees every vertex outside `j` and every other member of `j` has an
/// independent neighbourhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCompleteTriple {
    g: Graph,
    j: VertexSet,
    y: usize,
}

impl CoverCompleteTriple {
    pub fn new(g: Graph, j: VertexSet, y: usize) -> Result<Self> {
        Self::check(&g, j, y)?;
        Ok(CoverCompleteTriple { g, j, y })
    }

    pub fn check(g: &Graph, j: VertexSet, y: usize) -> Result<()> {
        g.check_set(j)?;
        g.check_vertex(y)?;
        let fail = |msg: String| Err(Error::Precondition(msg));
        if !j.contains(y) {
            return fail(format!("y = {y} is not in J = {j}"));
        }
        if !g.is_independent_set(j) {
            return fail(format!("J = {j} is not independent"));
        }
        let outside = g.vertices() - j;
        if !outside.is_subset(g.neighbors(y)) {
            return fail(format!("y = {y} misses vertices of G - J"));
        }
        for u in j.without(y) {
            if !g.is_independent_set(g.neighbors(u) & outside) {
                return fail(format!("neighbourhood of {u} is not independent"));
            }
        }
        Ok(())
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn j(&self) -> VertexSet {
        self.j
    }

    pub fn y(&self) -> usize {
        self.y
    }

    /// Smallest connected vertex cover containing `J`, via the provider.
    pub fn complete(&self, provider: &dyn Subroutines) -> Option<VertexSet> {
        provider.connected_vertex_cover_ext(&self.g, self.g.vertices(), self.j)
    }
}

/// Result of removing the members of `J - {y}` that have two adjacent
/// neighbours. Vertex `i` of `graph` is vertex `map[i]` of the input.
#[derive(Clone, Debug)]
pub struct DoubleNeighborReduction {
    pub graph: Graph,
    pub map: Vec<usize>,
    /// The surviving part of `J`, in new ids.
    pub j: VertexSet,
    /// `y` in new ids.
    pub y: usize,
    /// The removed vertices, in input ids.
    pub removed: VertexSet,
}

impl DoubleNeighborReduction {
    /// Maps a connected vertex cover of the reduced graph containing the
    /// reduced `J` back to one of the input graph containing `J`.
    pub fn lift(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.map[v]).collect::<VertexSet>() | self.removed
    }
}

pub fn reduce_by_double_neighbors(g: &Graph, j: VertexSet, y: usize) -> Result<DoubleNeighborReduction> {
    g.check_set(j)?;
    g.check_vertex(y)?;
    if !j.contains(y) || !g.is_independent_set(j) {
        return Err(Error::Precondition(format!(
            "J = {j} must be independent and contain y = {y}"
        )));
    }
    if !(g.vertices() - j).is_subset(g.neighbors(y)) {
        return Err(Error::Precondition(format!(
            "y = {y} must be adjacent to every vertex outside J"
        )));
    }
    let removed: VertexSet = j
        .without(y)
        .iter()
        .filter(|&u| !g.is_independent_set(g.neighbors(u)))
        .collect();
    let (graph, map) = g.induced_subgraph(g.vertices() - removed)?;
    let index = |v: usize| map.binary_search(&v).expect("kept vertex");
    let new_j = (j - removed).iter().map(index).collect();
    Ok(DoubleNeighborReduction {
        y: index(y),
        j: new_j,
        graph,
        map,
        removed,
    })
}

/// A connected dominating set that is a clique or has at most
/// `2s² + s + 3` vertices, as promised for connected (sP1+P5)-free graphs.
///
/// Tries a dominating vertex, then a greedily grown clique from every
/// vertex, then all connected sets by increasing size up to the bound.
pub fn connected_dominating_set_smallish(g: &Graph, s: usize) -> Result<VertexSet> {
    let all = g.vertices();
    if all.is_empty() {
        return Ok(VertexSet::EMPTY);
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if let Some(v) = all.iter().find(|&v| g.closed_neighbors(v) == all) {
        return Ok(VertexSet::singleton(v));
    }
    for v in all {
        let mut clique = VertexSet::singleton(v);
        let mut common = g.neighbors(v);
        while let Some(u) = common.first() {
            clique.insert(u);
            common &= g.neighbors(u);
            if g.dominates(clique, all) {
                return Ok(clique);
            }
        }
    }
    let bound = 2 * s * s + s + 3;
    let mut found = None;
    for_each_subset_up_to(all, bound, &mut |d| {
        if !d.is_empty() && g.dominates(d, all) && g.is_connected_within(d) {
            found = Some(d);
            true
        } else {
            false
        }
    });
    found.ok_or_else(|| {
        Error::Precondition(format!(
            "no connected dominating clique and none of size at most {bound}; \
             the graph is not (sP1+P5)-free for s = {s}"
        ))
    })
}

/// What the pipeline did on one input.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PipelineReport {
    pub dominating_set: VertexSet,
    /// Number of guesses `D*` examined.
    pub guesses: usize,
    /// Set when an internal check failed and the oracle answered instead.
    pub fallback_reason: Option<String>,
}

/// Smallest connected vertex cover of connected `g` containing `w`.
pub fn cvc_extension_pipeline(
    g: &Graph,
    w: VertexSet,
    s: usize,
    provider: &dyn Subroutines,
) -> Result<TransversalSolution> {
    cvc_extension_pipeline_report(g, w, s, provider).map(|(sol, _)| sol)
}

pub fn cvc_extension_pipeline_report(
    g: &Graph,
    w: VertexSet,
    s: usize,
    provider: &dyn Subroutines,
) -> Result<(TransversalSolution, PipelineReport)> {
    g.check_set(w)?;
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    let mut report = PipelineReport::default();
    if g.n() <= 1 {
        return Ok((checked(g, Problem::CvcExt, w, w), report));
    }
    let d = connected_dominating_set_smallish(g, s)?;
    report.dominating_set = d;
    let guess_pool = d - w;
    let max_guess = if g.is_clique(d) { 1 } else { guess_pool.len() };
    let mut best = Incumbent::default();
    let mut failure = None;
    for k in 0..=max_guess {
        for_each_subset_of_size(guess_pool, k, &mut |dstar| {
            report.guesses += 1;
            match solve_guess(g, w, d, dstar, s, provider) {
                Ok(Some(sol)) => {
                    best.offer(sol);
                    false
                }
                Ok(None) => false,
                Err(reason) => {
                    failure = Some(reason);
                    true
                }
            }
        });
        if failure.is_some() {
            break;
        }
    }
    let result = match (failure, best.best) {
        (None, Some(sol)) => sol,
        (reason, _) => {
            let reason = reason.unwrap_or_else(|| "no guess produced a solution".into());
            log::debug!("cvc pipeline fell back to the oracle: {reason}");
            report.fallback_reason = Some(reason);
            connected::min_connected_transversal(g, Target::Edgeless, g.vertices(), w)
                .expect("the whole vertex set of a connected graph is a connected cover")
        }
    };
    Ok((checked(g, Problem::CvcExt, result, w), report))
}

/// Best connected cover containing `w ∪ (D - D*)` and avoiding `D*`.
/// `Ok(None)` discards the guess; `Err` reports a failed internal check.
fn solve_guess(
    g: &Graph,
    w: VertexSet,
    d: VertexSet,
    dstar: VertexSet,
    s: usize,
    provider: &dyn Subroutines,
) -> std::result::Result<Option<VertexSet>, String> {
    let all = g.vertices();
    if dstar.is_empty() {
        let forced = d | w;
        let cover = forced | provider.min_vertex_cover(g, all - forced);
        return Ok(Some(cover));
    }
    if !g.is_independent_set(dstar) || !g.is_connected_within(all - dstar) {
        return Ok(None);
    }
    let keep = d - dstar;
    if keep.is_empty() {
        let cover = all - dstar;
        let ok = g.validate_solution(Problem::CvcExt, cover, w).is_ok();
        return Ok(ok.then_some(cover));
    }
    // Claim: some optimum contains a set R making G[keep ∪ R] connected,
    // made of induced paths of at most 2s+2 inner vertices each.
    let pieces = g.components_within(keep).len();
    let bound = (pieces - 1) * (2 * s + 2);
    let pool = all - dstar - keep;
    let forced_base = keep | w | (g.open_neighborhood(dstar) - dstar);
    let mut best = Incumbent::default();
    let mut failure = None;
    for_each_subset_up_to(pool, bound, &mut |r| {
        let joined = keep | r;
        if !g.is_connected_within(joined) || r.iter().any(|x| g.is_connected_within(joined.without(x))) {
            return false;
        }
        match complete_forced(g, w, dstar, keep, forced_base | r, provider) {
            Ok(Some(sol)) => {
                best.offer(sol);
                false
            }
            Ok(None) => false,
            Err(e) => {
                failure = Some(e);
                true
            }
        }
    });
    match failure {
        Some(e) => Err(e),
        None => Ok(best.best),
    }
}

/// Contracts the components of `G[forced]`, removes `D*`, applies the
/// double-neighbour reduction and completes the cover-complete triple.
fn complete_forced(
    g: &Graph,
    w: VertexSet,
    dstar: VertexSet,
    keep: VertexSet,
    forced: VertexSet,
    provider: &dyn Subroutines,
) -> std::result::Result<Option<VertexSet>, String> {
    let rest = g.vertices() - dstar;
    let mut classes = g.components_within(forced);
    let free = rest - forced;
    classes.extend(free.iter().map(VertexSet::singleton));
    classes.sort_by_key(|c| c.first());
    let (quotient, members) = quotient(g, &classes);
    let y = members
        .iter()
        .position(|c| keep.is_subset(*c))
        .ok_or("D - D* is split over several contracted vertices")?;
    let j_star: VertexSet = members
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_subset(forced))
        .map(|(i, _)| i)
        .collect();
    let red = reduce_by_double_neighbors(&quotient, j_star, y).map_err(|e| e.to_string())?;
    let triple = CoverCompleteTriple::new(red.graph.clone(), red.j, red.y).map_err(|e| e.to_string())?;
    let Some(partial) = triple.complete(provider) else {
        return Ok(None);
    };
    let lifted = red.lift(partial);
    let cover: VertexSet = lifted.iter().fold(VertexSet::EMPTY, |acc, i| acc | members[i]);
    if cover.intersects(dstar) || !(w | keep).is_subset(cover) {
        return Err(format!("lifted cover {cover} breaks the guess"));
    }
    g.validate_solution(Problem::CvcExt, cover, w)
        .map_err(|v| format!("lifted cover {cover} is invalid: {v}"))?;
    Ok(Some(cover))
}

/// The graph with one vertex per class, two classes adjacent when some edge
/// joins them. Classes must be disjoint.
fn quotient(g: &Graph, classes: &[VertexSet]) -> (Graph, Vec<VertexSet>) {
    let mut owner = vec![usize::MAX; g.n()];
    for (i, c) in classes.iter().enumerate() {
        for v in *c {
            owner[v] = i;
        }
    }
    let adj = classes
        .iter()
        .enumerate()
        .map(|(i, c)| {
            g.open_neighborhood(*c)
                .iter()
                .filter_map(|v| (owner[v] != usize::MAX && owner[v] != i).then_some(owner[v]))
                .collect()
        })
        .collect();
    (Graph::from_adjacency(adj), classes.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::oracle::ExactSubroutines;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_slice(v)
    }

    #[test]
    fn dominating_set_examples() {
        assert_eq!(connected_dominating_set_smallish(&complete(5), 0).unwrap().len(), 1);
        assert_eq!(connected_dominating_set_smallish(&star(4), 0).unwrap(), set(&[0]));
        assert_eq!(connected_dominating_set_smallish(&path(5), 0).unwrap(), set(&[1, 2, 3]));
    }

    #[test]
    fn double_neighbor_examples() {
        // y = 0 sees 1 and 2; 3 is in J with the adjacent neighbours 1, 2.
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (3, 1), (3, 2)]).unwrap();
        let red = reduce_by_double_neighbors(&g, set(&[0, 3]), 0).unwrap();
        assert_eq!(red.removed, set(&[3]));
        assert_eq!(red.graph.n(), 3);
        let only_y = reduce_by_double_neighbors(&g, set(&[0]), 0);
        assert!(only_y.is_err(), "3 is not adjacent to y");
        let star4 = star(3);
        let id = reduce_by_double_neighbors(&star4, set(&[0]), 0).unwrap();
        assert!(id.removed.is_empty());
        assert_eq!(id.graph, star4);
    }

    #[test]
    fn cover_complete_checks() {
        let g = star(3);
        assert!(CoverCompleteTriple::new(g.clone(), set(&[0]), 0).is_ok());
        assert!(CoverCompleteTriple::new(g, set(&[0, 1]), 0).is_err());
    }

    #[test]
    fn pipeline_examples() {
        let k3 = cvc_extension_pipeline(&complete(3), VertexSet::EMPTY, 0, &ExactSubroutines).unwrap();
        assert_eq!(k3.objective(), 2);
        let p5 = cvc_extension_pipeline(&path(5), VertexSet::EMPTY, 0, &ExactSubroutines).unwrap();
        assert_eq!(p5.vertices, set(&[1, 2, 3]));
        let (c5, report) = cvc_extension_pipeline_report(&cycle(5), set(&[0]), 1, &ExactSubroutines).unwrap();
        assert_eq!(c5.objective(), 4);
        assert_eq!(report.fallback_reason, None);
    }
}
