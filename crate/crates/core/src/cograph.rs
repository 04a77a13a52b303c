//! Algorithms on P4-free graphs: cotrees, the spanning complete bipartite
//! split, cotree dynamic programming for maximum independent sets, induced
//! forests and induced bipartite subgraphs, and the connected extension
//! solvers built on top of them.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, Problem, Target};
use crate::oracle::{checked, relevant_component, ExactSubroutines, Subroutines};
use crate::pattern::{p4_certificate, LinearForestPattern};
use crate::set::VertexSet;
use crate::solution::{Incumbent, TransversalSolution};

/// A cotree: leaves are vertices, `Union` and `Join` nodes have at least two
/// children, and labels alternate along every root-to-leaf path.
#[derive(Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(usize),
    Union(Vec<Cotree>),
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn leaves(&self) -> VertexSet {
        match self {
            Cotree::Leaf(v) => VertexSet::singleton(*v),
            Cotree::Union(ch) | Cotree::Join(ch) => ch.iter().fold(VertexSet::EMPTY, |a, c| a | c.leaves()),
        }
    }

    /// The graph on `n` vertices this cotree generates.
    pub fn to_graph(&self, n: usize) -> Result<Graph> {
        let mut edges = Vec::new();
        self.collect_edges(&mut edges);
        Graph::from_edges(n, edges)
    }

    fn collect_edges(&self, edges: &mut Vec<(usize, usize)>) {
        if let Cotree::Union(ch) | Cotree::Join(ch) = self {
            for c in ch {
                c.collect_edges(edges);
            }
            if let Cotree::Join(ch) = self {
                for (i, a) in ch.iter().enumerate() {
                    for b in &ch[i + 1..] {
                        for u in a.leaves() {
                            edges.extend(b.leaves().iter().map(|v| (u, v)));
                        }
                    }
                }
            }
        }
    }

    /// Every internal node has two or more children and differs in label
    /// from its parent.
    pub fn is_canonical(&self) -> bool {
        fn ok(t: &Cotree, parent_join: Option<bool>) -> bool {
            match t {
                Cotree::Leaf(_) => true,
                Cotree::Union(ch) | Cotree::Join(ch) => {
                    let join = matches!(t, Cotree::Join(_));
                    ch.len() >= 2 && parent_join != Some(join) && ch.iter().all(|c| ok(c, Some(join)))
                }
            }
        }
        ok(self, None)
    }
}

impl fmt::Debug for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (name, ch) = match self {
            Cotree::Leaf(v) => return write!(f, "{v}"),
            Cotree::Union(ch) => ("union", ch),
            Cotree::Join(ch) => ("join", ch),
        };
        write!(f, "{name}(")?;
        for (i, c) in ch.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c:?}")?;
        }
        write!(f, ")")
    }
}

fn not_cograph(g: &Graph) -> Option<Error> {
    p4_certificate(g).map(|p| Error::NotInClass {
        pattern: LinearForestPattern::path(4),
        certificate: p.to_vec(),
    })
}

/// The canonical cotree of a cograph with at least one vertex.
pub fn build_cotree(g: &Graph) -> Result<Cotree> {
    if let Some(e) = not_cograph(g) {
        return Err(e);
    }
    if g.n() == 0 {
        return Err(Error::Precondition("the empty graph has no cotree".into()));
    }
    Ok(cotree_within(g, g.vertices()))
}

/// Cotree of `G[mask]` for a cograph `g` and nonempty `mask`.
pub(crate) fn cotree_within(g: &Graph, mask: VertexSet) -> Cotree {
    if mask.len() == 1 {
        return Cotree::Leaf(mask.first().expect("nonempty"));
    }
    let comps = g.components_within(mask);
    if comps.len() > 1 {
        return Cotree::Union(comps.into_iter().map(|c| cotree_within(g, c)).collect());
    }
    let co = g.co_components_within(mask);
    assert!(co.len() > 1, "connected cograph with a connected complement");
    Cotree::Join(co.into_iter().map(|c| cotree_within(g, c)).collect())
}

/// Optimal vertex sets of `G[mask]` for one cotree node.
#[derive(Clone, Copy, Debug, Default)]
struct Best {
    independent: VertexSet,
    forest: VertexSet,
    bipartite: VertexSet,
}

fn larger(a: VertexSet, b: VertexSet) -> VertexSet {
    if b.len() > a.len() {
        b
    } else {
        a
    }
}

impl Cotree {
    /// Dynamic programme on the cotree restricted to `mask`. Restricting a
    /// cotree to a vertex subset yields a cotree of the induced subgraph
    /// once empty children are dropped and single-child nodes collapsed.
    fn best_within(&self, mask: VertexSet) -> Best {
        match self {
            Cotree::Leaf(v) => {
                if mask.contains(*v) {
                    let s = VertexSet::singleton(*v);
                    Best { independent: s, forest: s, bipartite: s }
                } else {
                    Best::default()
                }
            }
            Cotree::Union(ch) => ch.iter().fold(Best::default(), |acc, c| {
                let b = c.best_within(mask);
                Best {
                    independent: acc.independent | b.independent,
                    forest: acc.forest | b.forest,
                    bipartite: acc.bipartite | b.bipartite,
                }
            }),
            Cotree::Join(ch) => {
                let parts: Vec<(VertexSet, Best)> = ch
                    .iter()
                    .map(|c| (c.leaves() & mask, c))
                    .filter(|(l, _)| !l.is_empty())
                    .map(|(l, c)| (l, c.best_within(mask)))
                    .collect();
                let mut out = Best::default();
                for (_, b) in &parts {
                    out.independent = larger(out.independent, b.independent);
                    out.forest = larger(out.forest, b.forest);
                    out.bipartite = larger(out.bipartite, b.bipartite);
                }
                if parts.len() >= 2 {
                    // A star: one vertex from one side, an independent set
                    // from another.
                    for (i, (_, b)) in parts.iter().enumerate() {
                        let other = parts
                            .iter()
                            .enumerate()
                            .find(|(j, _)| *j != i)
                            .map(|(_, (l, _))| l.first().expect("nonempty"))
                            .expect("two parts");
                        out.forest = larger(out.forest, b.independent.with(other));
                    }
                    // Two independent sets from different sides.
                    let mut by_size: Vec<VertexSet> = parts.iter().map(|(_, b)| b.independent).collect();
                    by_size.sort_by_key(|s| std::cmp::Reverse(s.len()));
                    out.bipartite = larger(out.bipartite, by_size[0] | by_size[1]);
                }
                out
            }
        }
    }
}

/// Largest induced subgraph of `G[mask]` with the target property, for a
/// cograph `g` with cotree `tree`.
pub(crate) fn max_induced_within(tree: &Cotree, mask: VertexSet, target: Target) -> VertexSet {
    let b = tree.best_within(mask);
    match target {
        Target::Edgeless => b.independent,
        Target::Forest => b.forest,
        Target::Bipartite => b.bipartite,
    }
}

fn max_induced_cotree(g: &Graph, target: Target, problem: Problem) -> Result<TransversalSolution> {
    if g.n() == 0 {
        if let Some(e) = not_cograph(g) {
            return Err(e);
        }
        return Ok(TransversalSolution::new(problem, VertexSet::EMPTY));
    }
    let tree = build_cotree(g)?;
    let s = max_induced_within(&tree, g.vertices(), target);
    Ok(checked(g, problem, s, VertexSet::EMPTY))
}

pub fn max_independent_set_cotree(g: &Graph) -> Result<TransversalSolution> {
    max_induced_cotree(g, Target::Edgeless, Problem::Mis)
}

pub fn max_induced_forest_cotree(g: &Graph) -> Result<TransversalSolution> {
    max_induced_cotree(g, Target::Forest, Problem::MaxInducedForest)
}

pub fn max_induced_bipartite_cotree(g: &Graph) -> Result<TransversalSolution> {
    max_induced_cotree(g, Target::Bipartite, Problem::MaxInducedBipartite)
}

pub fn min_fvs_cograph(g: &Graph) -> Result<TransversalSolution> {
    Ok(max_induced_forest_cotree(g)?.complement_in(g))
}

pub fn min_oct_cograph(g: &Graph) -> Result<TransversalSolution> {
    Ok(max_induced_bipartite_cotree(g)?.complement_in(g))
}

/// `X` complete to `Y`, both nonempty, covering all vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteSplit {
    pub x: VertexSet,
    pub y: VertexSet,
}

impl BipartiteSplit {
    pub fn is_valid(&self, g: &Graph) -> bool {
        !self.x.is_empty()
            && !self.y.is_empty()
            && self.x.is_disjoint(self.y)
            && (self.x | self.y) == g.vertices()
            && self.x.iter().all(|u| self.y.is_subset(g.neighbors(u)))
    }
}

/// Splits a connected cograph on two or more vertices: `X` is the component
/// of the complement containing vertex 0, `Y` everything else.
pub fn spanning_split(g: &Graph) -> Result<BipartiteSplit> {
    if g.n() < 2 {
        return Err(Error::Precondition("a split needs at least two vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    if let Some(e) = not_cograph(g) {
        return Err(e);
    }
    Ok(split_within(g, g.vertices()))
}

fn split_within(g: &Graph, mask: VertexSet) -> BipartiteSplit {
    let x = g.co_components_within(mask)[0];
    BipartiteSplit { x, y: mask - x }
}

/// Smallest connected feedback vertex set containing `w` of a cograph.
pub fn cfvs_extension_p4free(g: &Graph, w: VertexSet) -> Result<TransversalSolution> {
    connected_extension(g, w, Target::Forest, &ExactSubroutines)
}

/// Smallest connected odd cycle transversal containing `w` of a cograph.
pub fn coct_extension_p4free(g: &Graph, w: VertexSet) -> Result<TransversalSolution> {
    connected_extension(g, w, Target::Bipartite, &ExactSubroutines)
}

pub fn cfvs_extension_p4free_with(g: &Graph, w: VertexSet, provider: &dyn Subroutines) -> Result<TransversalSolution> {
    connected_extension(g, w, Target::Forest, provider)
}

pub fn coct_extension_p4free_with(g: &Graph, w: VertexSet, provider: &dyn Subroutines) -> Result<TransversalSolution> {
    connected_extension(g, w, Target::Bipartite, provider)
}

fn connected_extension(
    g: &Graph,
    w: VertexSet,
    target: Target,
    provider: &dyn Subroutines,
) -> Result<TransversalSolution> {
    g.check_set(w)?;
    if let Some(e) = not_cograph(g) {
        return Err(e);
    }
    let problem = Problem::transversal(target, true);
    let Some(comp) = relevant_component(g, target, w)? else {
        return Ok(checked(g, problem, VertexSet::EMPTY, w));
    };
    let s = solve_connected(g, comp, w, target, provider);
    Ok(checked(g, problem, s, w))
}

/// Solves on the connected cograph `G[comp]` with `w ⊆ comp`; the result
/// is valid for `g` because every other component already has the target
/// property.
fn solve_connected(
    g: &Graph,
    comp: VertexSet,
    w: VertexSet,
    target: Target,
    provider: &dyn Subroutines,
) -> VertexSet {
    if w.is_empty() && g.satisfies_within(target, comp) {
        return VertexSet::EMPTY;
    }
    if comp.len() == 1 {
        return comp;
    }
    let tree = cotree_within(g, comp);
    let split = split_within(g, comp);
    let valid = |s: VertexSet| {
        w.is_subset(s) && s.is_subset(comp) && g.is_connected_within(s) && g.satisfies_within(target, comp - s)
    };
    let mut best = Incumbent::default();
    // Step 1: the solution meets both sides. Any u ∈ X, v ∈ Y form a
    // dominating edge, so adding u, v to w and solving the rest without a
    // connectivity constraint gives a connected set.
    for u in split.x {
        for v in split.y {
            let forced = w.with(u).with(v);
            let rest = comp - forced;
            let s = forced | (rest - max_induced_within(&tree, rest, target));
            assert!(g.is_connected_within(s), "dominating edge must connect {s}");
            if valid(s) {
                best.offer(s);
            }
        }
    }
    // Step 2: the solution lies inside one side.
    for (side, other) in [(split.x, split.y), (split.y, split.x)] {
        if !w.is_subset(side) {
            continue;
        }
        for s in one_side_candidates(g, side, other, w, target, provider) {
            if valid(s) {
                best.offer(s);
            }
        }
    }
    best.best.expect("the whole component is always a solution")
}

fn one_side_candidates(
    g: &Graph,
    side: VertexSet,
    other: VertexSet,
    w: VertexSet,
    target: Target,
    provider: &dyn Subroutines,
) -> Vec<VertexSet> {
    // An edge on the other side forms a triangle with any leftover vertex.
    if !g.is_independent_set(other) {
        return vec![side];
    }
    let cover = || provider.connected_vertex_cover_ext(g, side, w);
    match target {
        Target::Bipartite => cover().into_iter().collect(),
        Target::Forest if other.len() == 1 => cover().into_iter().collect(),
        Target::Forest => {
            // Two leftover vertices would close a 4-cycle with two vertices
            // of the other side.
            let mut out: Vec<VertexSet> = (side - w).iter().map(|x| side.without(x)).collect();
            out.push(side);
            out
        }
        Target::Edgeless => unreachable!("vertex cover is not solved here"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::oracle::exact::min_connected_transversal_subsets;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_slice(v)
    }

    #[test]
    fn cotree_examples() {
        assert_eq!(build_cotree(&complete(2)).unwrap(), Cotree::Join(vec![Cotree::Leaf(0), Cotree::Leaf(1)]));
        let two = Graph::empty(2).unwrap();
        assert_eq!(build_cotree(&two).unwrap(), Cotree::Union(vec![Cotree::Leaf(0), Cotree::Leaf(1)]));
        match build_cotree(&path(4)) {
            Err(Error::NotInClass { certificate, .. }) => assert_eq!(certificate, vec![0, 1, 2, 3]),
            other => panic!("{other:?}"),
        }
        let t = build_cotree(&cycle(4)).unwrap();
        assert!(t.is_canonical());
        assert_eq!(t.to_graph(4).unwrap(), cycle(4));
    }

    #[test]
    fn split_examples() {
        let s = spanning_split(&complete(2)).unwrap();
        assert_eq!((s.x, s.y), (set(&[0]), set(&[1])));
        let s = spanning_split(&cycle(4)).unwrap();
        assert_eq!((s.x, s.y), (set(&[0, 2]), set(&[1, 3])));
        // The complement of K1,3 is K1 + K3, so the centre is alone.
        let s = spanning_split(&star(3)).unwrap();
        assert_eq!(s.x, set(&[0]));
        assert!(s.is_valid(&star(3)));
        assert!(spanning_split(&path(4)).is_err());
        assert!(spanning_split(&Graph::empty(2).unwrap()).is_err());
    }

    #[test]
    fn dp_examples() {
        assert_eq!(max_induced_forest_cotree(&complete(4)).unwrap().objective(), 2);
        assert_eq!(max_induced_bipartite_cotree(&complete(4)).unwrap().objective(), 2);
        assert_eq!(max_induced_forest_cotree(&cycle(4)).unwrap().objective(), 3);
        assert_eq!(max_induced_bipartite_cotree(&cycle(4)).unwrap().objective(), 4);
        assert_eq!(min_fvs_cograph(&complete(5)).unwrap().objective(), 3);
    }

    #[test]
    fn extension_examples() {
        assert_eq!(cfvs_extension_p4free(&complete(4), VertexSet::EMPTY).unwrap().objective(), 2);
        assert_eq!(cfvs_extension_p4free(&complete(2), VertexSet::EMPTY).unwrap().objective(), 0);
        // Deleting one vertex of C4 leaves P3, so W itself is optimal.
        let c4 = cfvs_extension_p4free(&cycle(4), set(&[0])).unwrap();
        let brute = min_connected_transversal_subsets(&cycle(4), Target::Forest, cycle(4).vertices(), set(&[0]));
        assert_eq!(brute, Some(set(&[0])));
        assert_eq!(c4.vertices, set(&[0]));
        assert_eq!(coct_extension_p4free(&complete(4), VertexSet::EMPTY).unwrap().objective(), 2);
        assert_eq!(coct_extension_p4free(&cycle(4), VertexSet::EMPTY).unwrap().objective(), 0);
    }
}
