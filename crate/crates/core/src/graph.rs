//! Immutable simple undirected graphs and the elementary predicates every
//! algorithm in the crate is built from.
//!
//! Adjacency is stored as one [`VertexSet`] per vertex. Neighbor iteration is
//! therefore always in ascending id order, and most predicates come in a
//! `*_within(mask)` form that works on the induced subgraph `G[mask]` without
//! materializing it.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::set::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// A 2-colouring of (a subset of) the vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list. Repeated edges are merged; self-loops
    /// and out-of-range ids are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency sets, symmetrizing and dropping loops.
    pub(crate) fn from_adjacency(mut adj: Vec<VertexSet>) -> Graph {
        let n = adj.len();
        let all = VertexSet::full(n);
        for u in 0..n {
            adj[u] = (adj[u] & all).without(u);
        }
        for u in 0..n {
            for v in adj[u] {
                adj[v].insert(u);
            }
        }
        Graph { adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> VertexSet {
        self.adj[u]
    }

    #[inline]
    pub fn closed_neighbors(&self, u: usize) -> VertexSet {
        self.adj[u].with(u)
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].above(u).iter().map(move |v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match (s - self.vertices()).first() {
            Some(v) => Err(Error::InvalidVertex {
                vertex: v,
                n: self.n(),
            }),
            None => Ok(()),
        }
    }

    /// `N(U) = ⋃ N(u) \ U`.
    pub fn open_neighborhood(&self, set: VertexSet) -> VertexSet {
        self.union_of_neighbors(set) - set
    }

    /// `N[U] = ⋃ N(u) ∪ U`.
    pub fn closed_neighborhood(&self, set: VertexSet) -> VertexSet {
        self.union_of_neighbors(set) | set
    }

    fn union_of_neighbors(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::EMPTY, |acc, u| acc | self.adj[u])
    }

    /// Number of edges of `G[mask]`.
    pub fn edges_within(&self, mask: VertexSet) -> usize {
        mask.iter().map(|u| (self.adj[u] & mask).len()).sum::<usize>() / 2
    }

    pub fn is_independent_set(&self, set: VertexSet) -> bool {
        set.iter().all(|u| self.adj[u].is_disjoint(set))
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|u| set.without(u).is_subset(self.adj[u]))
    }

    /// `uv` is an edge and `{u, v}` dominates the graph.
    pub fn is_dominating_edge(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) && (self.adj[u] | self.adj[v]).with(u).with(v) == self.vertices()
    }

    /// Every vertex of `within` is in `set` or adjacent to it.
    pub fn dominates(&self, set: VertexSet, within: VertexSet) -> bool {
        within.is_subset(self.closed_neighborhood(set))
    }

    /// The subgraph induced by `s`, with `map[i]` the original id of new
    /// vertex `i`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map = s.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|w| index[w]).collect())
            .collect();
        Ok((Graph { adj }, map))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n())
            .map(|u| (all - self.adj[u]).without(u))
            .collect();
        Graph { adj }
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn components_within(&self, mask: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = mask;
        while let Some(v) = rest.first() {
            let comp = self.reach_within(v, mask);
            out.push(comp);
            rest -= comp;
        }
        out
    }

    /// Components of the complement of `G[mask]`.
    pub fn co_components_within(&self, mask: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = mask;
        while let Some(v) = rest.first() {
            let mut comp = VertexSet::singleton(v);
            let mut frontier = comp;
            while let Some(u) = frontier.first() {
                frontier.remove(u);
                let next = (mask - self.adj[u]) - comp;
                comp |= next;
                frontier |= next;
            }
            out.push(comp);
            rest -= comp;
        }
        out
    }

    /// Vertices reachable from `v` inside `G[mask]`.
    pub fn reach_within(&self, v: usize, mask: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next |= self.adj[u];
            }
            frontier = (next & mask) - seen;
            seen |= frontier;
        }
        seen
    }

    /// `G[mask]` is connected. The empty set counts as connected.
    pub fn is_connected_within(&self, mask: VertexSet) -> bool {
        match mask.first() {
            None => true,
            Some(v) => self.reach_within(v, mask) == mask,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    pub fn is_acyclic_within(&self, mask: VertexSet) -> bool {
        let k = mask.len();
        let m = self.edges_within(mask);
        if k == 0 {
            return true;
        }
        if m >= k {
            return false;
        }
        m + self.components_within(mask).len() == k
    }

    pub fn is_bipartite_within(&self, mask: VertexSet) -> bool {
        self.two_colouring_within(mask).is_some()
    }

    pub fn is_edgeless_within(&self, mask: VertexSet) -> bool {
        mask.iter().all(|u| self.adj[u].is_disjoint(mask))
    }

    /// BFS layering per component; even layers on the left.
    fn two_colouring_within(&self, mask: VertexSet) -> Option<Bipartition> {
        let mut left = VertexSet::EMPTY;
        let mut right = VertexSet::EMPTY;
        let mut rest = mask;
        while let Some(r) = rest.first() {
            let mut seen = VertexSet::singleton(r);
            let mut layer = seen;
            let mut even = true;
            while !layer.is_empty() {
                if even {
                    left |= layer;
                } else {
                    right |= layer;
                }
                let mut next = VertexSet::EMPTY;
                for u in layer {
                    next |= self.adj[u];
                }
                layer = (next & mask) - seen;
                seen |= layer;
                even = !even;
            }
            rest -= seen;
        }
        (self.is_independent_set(left) && self.is_independent_set(right))
            .then_some(Bipartition { left, right })
    }

    /// A valid bipartition, or a shortest odd cycle as a witness.
    pub fn bipartition(&self) -> std::result::Result<Bipartition, Vec<usize>> {
        match self.two_colouring_within(self.vertices()) {
            Some(b) => Ok(b),
            None => Err(self
                .shortest_cycle_within(self.vertices(), CycleParity::Odd)
                .expect("non-bipartite graph has an odd cycle")),
        }
    }

    /// `Ok` when acyclic, otherwise a shortest cycle.
    pub fn forest_check(&self) -> std::result::Result<(), Vec<usize>> {
        match self.shortest_cycle_within(self.vertices(), CycleParity::Any) {
            None => Ok(()),
            Some(c) => Err(c),
        }
    }

    pub fn is_forest(&self) -> bool {
        self.is_acyclic_within(self.vertices())
    }

    /// A shortest (odd) cycle of `G[mask]`, as a vertex sequence.
    ///
    /// Shortest cycles are chordless, which the branch-and-bound oracle
    /// relies on to keep its branching factor small.
    pub fn shortest_cycle_within(&self, mask: VertexSet, parity: CycleParity) -> Option<Vec<usize>> {
        let n = self.n();
        let mut best: Option<(usize, usize, usize, usize)> = None; // (len, root, u, w)
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in mask {
            for v in mask {
                dist[v] = usize::MAX;
            }
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if let Some((len, ..)) = best {
                    if 2 * dist[u] + 1 >= len {
                        break;
                    }
                }
                for w in self.adj[u] & mask {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if w != parent[u] && (parity == CycleParity::Any || dist[w] == dist[u]) {
                        let len = dist[u] + dist[w] + 1;
                        if best.is_none_or(|b| len < b.0) {
                            best = Some((len, root, u, w));
                        }
                    }
                }
            }
        }
        let (_, root, u, w) = best?;
        // Rebuild the BFS tree for the winning root.
        for v in mask {
            dist[v] = usize::MAX;
        }
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for y in self.adj[x] & mask {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let climb = |mut v: usize| {
            let mut path = vec![v];
            while v != root {
                v = parent[v];
                path.push(v);
            }
            path
        };
        let mut cycle = climb(u);
        let mut other = climb(w);
        other.pop();
        other.reverse();
        cycle.extend(other);
        Some(cycle)
    }

    /// Contracts the edge `uv`. The merged vertex takes the smaller id and
    /// ids above the larger one shift down by one; `map[old] = new`.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let map: Vec<usize> = (0..self.n())
            .map(|x| match x.cmp(&gone) {
                std::cmp::Ordering::Less => x,
                std::cmp::Ordering::Equal => keep,
                std::cmp::Ordering::Greater => x - 1,
            })
            .collect();
        let mut adj = vec![VertexSet::EMPTY; self.n() - 1];
        for (x, y) in self.edges() {
            let (a, b) = (map[x], map[y]);
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        Ok((Graph { adj }, map))
    }

    /// Whether `G - s` has the property demanded by `target`.
    pub fn remainder_satisfies(&self, target: Target, s: VertexSet) -> bool {
        self.satisfies_within(target, self.vertices() - s)
    }

    /// Whether `G[mask]` is edgeless / a forest / bipartite.
    pub fn satisfies_within(&self, target: Target, mask: VertexSet) -> bool {
        match target {
            Target::Edgeless => self.is_edgeless_within(mask),
            Target::Forest => self.is_acyclic_within(mask),
            Target::Bipartite => self.is_bipartite_within(mask),
        }
    }

    /// Checks `s` against the definition of `problem`, with `w` the set the
    /// solution must contain (transversals) or avoid (maximization tags).
    pub fn validate_solution(
        &self,
        problem: Problem,
        s: VertexSet,
        w: VertexSet,
    ) -> std::result::Result<(), Violation> {
        if let Some(v) = ((s | w) - self.vertices()).first() {
            return Err(Violation::InvalidVertex(v));
        }
        if problem.is_maximization() {
            if s.intersects(w) {
                return Err(Violation::ContainsForbidden);
            }
            return if self.satisfies_within(problem.target(), s) {
                Ok(())
            } else {
                Err(Violation::from_target(problem.target()))
            };
        }
        if !w.is_subset(s) {
            return Err(Violation::MissingRequired);
        }
        if !self.remainder_satisfies(problem.target(), s) {
            return Err(Violation::from_target(problem.target()));
        }
        if problem.is_connected() && !self.is_connected_within(s) {
            return Err(Violation::NotConnected);
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycleParity {
    Any,
    Odd,
}

/// What must remain after deleting a transversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Edgeless,
    Forest,
    Bipartite,
}

/// Problem tags. The `*Ext` variants are the connected extension problems
/// (`W ⊆ S`, `G[S]` connected); the plain transversal tags also honor a
/// required set `W` when one is given.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Problem {
    Vc,
    CvcExt,
    Fvs,
    CfvsExt,
    Oct,
    CoctExt,
    Mis,
    MaxInducedForest,
    MaxInducedBipartite,
}

impl Problem {
    pub fn target(self) -> Target {
        match self {
            Problem::Vc | Problem::CvcExt | Problem::Mis => Target::Edgeless,
            Problem::Fvs | Problem::CfvsExt | Problem::MaxInducedForest => Target::Forest,
            Problem::Oct | Problem::CoctExt | Problem::MaxInducedBipartite => Target::Bipartite,
        }
    }

    pub fn is_connected(self) -> bool {
        matches!(self, Problem::CvcExt | Problem::CfvsExt | Problem::CoctExt)
    }

    pub fn is_maximization(self) -> bool {
        matches!(
            self,
            Problem::Mis | Problem::MaxInducedForest | Problem::MaxInducedBipartite
        )
    }

    pub fn transversal(target: Target, connected: bool) -> Problem {
        match (target, connected) {
            (Target::Edgeless, false) => Problem::Vc,
            (Target::Edgeless, true) => Problem::CvcExt,
            (Target::Forest, false) => Problem::Fvs,
            (Target::Forest, true) => Problem::CfvsExt,
            (Target::Bipartite, false) => Problem::Oct,
            (Target::Bipartite, true) => Problem::CoctExt,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Problem::Vc => "vc",
            Problem::CvcExt => "cvc",
            Problem::Fvs => "fvs",
            Problem::CfvsExt => "cfvs",
            Problem::Oct => "oct",
            Problem::CoctExt => "coct",
            Problem::Mis => "mis",
            Problem::MaxInducedForest => "max-induced-forest",
            Problem::MaxInducedBipartite => "max-induced-bipartite",
        }
    }

    pub fn from_name(name: &str) -> Option<Problem> {
        [
            Problem::Vc,
            Problem::CvcExt,
            Problem::Fvs,
            Problem::CfvsExt,
            Problem::Oct,
            Problem::CoctExt,
            Problem::Mis,
            Problem::MaxInducedForest,
            Problem::MaxInducedBipartite,
        ]
        .into_iter()
        .find(|p| p.name() == name)
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Why a candidate failed [`Graph::validate_solution`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    InvalidVertex(usize),
    UncoveredEdge,
    CycleRemains,
    OddCycleRemains,
    NotConnected,
    MissingRequired,
    ContainsForbidden,
}

impl Violation {
    fn from_target(t: Target) -> Violation {
        match t {
            Target::Edgeless => Violation::UncoveredEdge,
            Target::Forest => Violation::CycleRemains,
            Target::Bipartite => Violation::OddCycleRemains,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InvalidVertex(v) => write!(f, "invalid vertex {v}"),
            Violation::UncoveredEdge => f.write_str("uncovered edge"),
            Violation::CycleRemains => f.write_str("remainder has a cycle"),
            Violation::OddCycleRemains => f.write_str("remainder has an odd cycle"),
            Violation::NotConnected => f.write_str("S not connected"),
            Violation::MissingRequired => f.write_str("S does not contain W"),
            Violation::ContainsForbidden => f.write_str("set meets the forbidden vertices"),
        }
    }
}

/// Small named graphs used throughout tests and examples.
pub mod families {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
            .expect("valid clique")
    }

    /// `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            .expect("valid complete bipartite graph")
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("valid Petersen graph")
    }

    /// Disjoint union, `b` relabelled after `a`.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let off = a.n();
        Graph::from_edges(
            a.n() + b.n(),
            a.edges().chain(b.edges().map(|(u, v)| (u + off, v + off))),
        )
        .expect("union fits")
    }

    /// Every vertex of `a` joined to every vertex of `b`.
    pub fn join(a: &Graph, b: &Graph) -> Graph {
        let off = a.n();
        let cross = (0..a.n()).flat_map(|u| (0..b.n()).map(move |v| (u, v + off)));
        Graph::from_edges(
            a.n() + b.n(),
            a.edges()
                .chain(b.edges().map(|(u, v)| (u + off, v + off)))
                .chain(cross),
        )
        .expect("join fits")
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_slice(v)
    }

    #[test]
    fn induced_subgraph_examples() {
        let (p, map) = cycle(4).induced_subgraph(set(&[0, 1, 2])).unwrap();
        assert_eq!(p, path(3));
        assert_eq!(map, vec![0, 1, 2]);
        let (e, _) = petersen().induced_subgraph(VertexSet::EMPTY).unwrap();
        assert_eq!(e.n(), 0);
        let (k3, _) = complete(4).induced_subgraph(set(&[0, 2, 3])).unwrap();
        assert_eq!(k3, complete(3));
        assert!(matches!(
            path(3).induced_subgraph(set(&[5])),
            Err(Error::InvalidVertex { vertex: 5, n: 3 })
        ));
    }

    #[test]
    fn complement_examples() {
        let c = cycle(4).complement();
        assert_eq!(c.m(), 2);
        assert_eq!(c.connected_components().len(), 2);
        assert_eq!(complete(5).complement(), Graph::empty(5).unwrap());
        let p = petersen();
        assert_eq!(p.complement().complement(), p);
    }

    #[test]
    fn components_examples() {
        let comps = cycle(4).complement().connected_components();
        assert_eq!(comps, vec![set(&[0, 2]), set(&[1, 3])]);
        assert_eq!(petersen().connected_components().len(), 1);
        assert!(Graph::empty(0).unwrap().connected_components().is_empty());
    }

    #[test]
    fn bipartite_examples() {
        let b = cycle(4).bipartition().unwrap();
        assert_eq!((b.left, b.right), (set(&[0, 2]), set(&[1, 3])));
        let w = cycle(5).bipartition().unwrap_err();
        assert_eq!(w.len(), 5);
        assert_eq!(complete(3).bipartition().unwrap_err().len(), 3);
    }

    #[test]
    fn odd_witness_is_a_cycle() {
        let g = petersen();
        let c = g.bipartition().unwrap_err();
        assert_eq!(c.len(), 5);
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn forest_examples() {
        assert_eq!(complete(3).forest_check().unwrap_err().len(), 3);
        assert!(star(4).is_forest());
        assert!(path(6).forest_check().is_ok());
        assert!(Graph::empty(0).unwrap().is_forest());
        assert_eq!(cycle(4).forest_check().unwrap_err().len(), 4);
    }

    #[test]
    fn contraction_examples() {
        let (g, map) = path(3).contract_edge(0, 1).unwrap();
        assert_eq!(g, path(2));
        assert_eq!(map, vec![0, 0, 1]);
        assert_eq!(complete(3).contract_edge(1, 2).unwrap().0, complete(2));
        assert_eq!(cycle(4).contract_edge(0, 1).unwrap().0, complete(3));
        assert_eq!(cycle(4).contract_edge(0, 2), Err(Error::NotAnEdge(0, 2)));
    }

    #[test]
    fn validate_examples() {
        assert!(cycle(5)
            .validate_solution(Problem::Oct, set(&[0]), VertexSet::EMPTY)
            .is_ok());
        assert_eq!(
            cycle(4).validate_solution(Problem::CfvsExt, set(&[0, 2]), set(&[0, 2])),
            Err(Violation::NotConnected)
        );
        assert_eq!(
            complete(3).validate_solution(Problem::Vc, set(&[0]), VertexSet::EMPTY),
            Err(Violation::UncoveredEdge)
        );
        assert_eq!(
            cycle(5).validate_solution(Problem::Oct, set(&[0]), set(&[1])),
            Err(Violation::MissingRequired)
        );
        assert_eq!(
            complete(3).validate_solution(Problem::Mis, set(&[0]), set(&[0])),
            Err(Violation::ContainsForbidden)
        );
    }

    #[test]
    fn full_vertex_set_is_always_a_solution() {
        for g in [petersen(), cycle(5), complete(4), path(1)] {
            for p in [Problem::Vc, Problem::Fvs, Problem::Oct, Problem::CvcExt] {
                assert!(g.validate_solution(p, g.vertices(), VertexSet::EMPTY).is_ok());
            }
        }
    }

    #[test]
    fn neighborhoods_and_predicates() {
        let p = path(5);
        assert_eq!(p.open_neighborhood(set(&[1, 2])), set(&[0, 3]));
        assert_eq!(p.closed_neighborhood(set(&[0])), set(&[0, 1]));
        assert!(p.is_independent_set(set(&[0, 2, 4])));
        assert!(!p.is_clique(set(&[0, 2])));
        assert!(complete(4).is_clique(set(&[0, 1, 3])));
        assert!(complete_bipartite(2, 3).is_dominating_edge(0, 3));
        assert!(!p.is_dominating_edge(1, 2));
    }

    #[test]
    fn too_many_vertices() {
        assert!(Graph::empty(129).is_err());
        assert!(Graph::empty(128).is_ok());
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::SelfLoop(1)));
    }
}
