//! Structural facts about (sP1+P3)-free graphs as checkable operations.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::find_induced;
use crate::pattern::LinearForestPattern;
use crate::set::VertexSet;

use super::ClassParam;

fn require_class(g: &Graph, p: ClassParam) -> Result<()> {
    if let Some(copy) = find_induced(g, &p.pattern()) {
        return Err(Error::Precondition(format!(
            "graph contains an induced {} on {:?}",
            p.pattern(),
            copy.vertices()
        )));
    }
    Ok(())
}

/// Whether a component with at least `c(s)` vertices leaves room only for
/// at most `s - 1` further components, each on at most two vertices.
///
/// Checked variant of [`component_structure_holds`]: `g` must be bipartite
/// and (sP1+P3)-free.
pub fn check_component_structure(g: &Graph, s: usize) -> Result<bool> {
    if !g.is_bipartite_within(g.vertices()) {
        return Err(Error::Precondition("graph is not bipartite".into()));
    }
    require_class(g, ClassParam::new(s))?;
    Ok(component_structure_holds(g, s))
}

/// The predicate of [`check_component_structure`] without the input checks.
/// For `s = 0` the allowance of other components is zero.
pub fn component_structure_holds(g: &Graph, s: usize) -> bool {
    let c = ClassParam::new(s).c();
    let comps = g.connected_components();
    comps.iter().enumerate().all(|(i, big)| {
        if big.len() < c {
            return true;
        }
        let others: Vec<&VertexSet> = comps.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, o)| o).collect();
        others.len() <= s.saturating_sub(1) && others.iter().all(|o| o.len() <= 2)
    })
}

/// Whether the tree `t` has at most `4s` vertices of degree two or more.
/// `t` must be a tree and (sP1+P3)-free.
pub fn internal_vertex_bound(t: &Graph, s: usize) -> Result<bool> {
    if t.n() == 0 || !t.is_connected() || !t.is_forest() {
        return Err(Error::Precondition("not a tree".into()));
    }
    require_class(t, ClassParam::new(s))?;
    let internal = t.vertices().iter().filter(|&v| t.degree(v) >= 2).count();
    Ok(internal <= ClassParam::new(s).tree_internal_bound())
}

/// A set `R`, disjoint from `u`, with `G[R ∪ u]` connected and
/// `|R| ≤ 2s² - 2s + 3`.
///
/// Built from an induced P3 together with the inner vertices of shortest
/// paths from it to every component of `G[u]`, then thinned greedily (largest
/// vertex first). `g` must be connected. Membership in the class is not
/// checked; if the construction overshoots the bound the input cannot be
/// (sP1+P3)-free and `Error::Precondition` is returned.
pub fn connector_set(g: &Graph, u: VertexSet, s: usize) -> Result<VertexSet> {
    g.check_set(u)?;
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    if g.is_connected_within(u) {
        return Ok(VertexSet::EMPTY);
    }
    let p3 = find_induced(g, &LinearForestPattern::path(3))
        .ok_or_else(|| Error::Precondition("a connected graph without an induced P3 is complete".into()))?
        .vertex_set();
    let mut r = p3;
    for comp in g.components_within(u) {
        r |= inner_path(g, p3, comp);
    }
    r -= u;
    for v in r.to_vec().into_iter().rev() {
        if g.is_connected_within((r | u).without(v)) {
            r.remove(v);
        }
    }
    debug_assert!(g.is_connected_within(r | u));
    let bound = ClassParam::new(s).connector_bound();
    if r.len() > bound {
        return Err(Error::Precondition(format!(
            "connector of size {} exceeds {bound}; the graph is not in the class",
            r.len()
        )));
    }
    Ok(r)
}

/// Inner vertices of a shortest path from `from` to `to` (both nonempty,
/// in one component).
fn inner_path(g: &Graph, from: VertexSet, to: VertexSet) -> VertexSet {
    if from.intersects(to) {
        return VertexSet::EMPTY;
    }
    let mut parent = vec![usize::MAX; g.n()];
    let mut seen = from;
    let mut frontier = from;
    loop {
        let mut next = VertexSet::EMPTY;
        for v in frontier {
            for w in g.neighbors(v) - seen - next {
                parent[w] = v;
                next.insert(w);
            }
        }
        assert!(!next.is_empty(), "target unreachable in a connected graph");
        if let Some(hit) = (next & to).first() {
            let mut inner = VertexSet::EMPTY;
            let mut v = parent[hit];
            while !from.contains(v) {
                inner.insert(v);
                v = parent[v];
            }
            return inner;
        }
        seen |= next;
        frontier = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn component_structure_examples() {
        assert!(component_structure_holds(&path(3), 0));
        assert!(matches!(check_component_structure(&path(3), 0), Err(Error::Precondition(_))));
        let two = disjoint_union(&path(3), &path(3));
        assert!(!component_structure_holds(&two, 1));
        assert!(matches!(check_component_structure(&two, 1), Err(Error::Precondition(_))));
        assert!(matches!(check_component_structure(&cycle(5), 1), Err(Error::Precondition(_))));
        let g = disjoint_union(&star(4), &path(2));
        assert_eq!(check_component_structure(&g, 2).unwrap(), true);
    }

    #[test]
    fn internal_vertices() {
        assert_eq!(internal_vertex_bound(&star(6), 1).unwrap(), true);
        assert_eq!(internal_vertex_bound(&path(3), 1).unwrap(), true);
        assert!(internal_vertex_bound(&cycle(4), 1).is_err());
        assert!(internal_vertex_bound(&path(5), 1).is_err());
    }

    #[test]
    fn connector_examples() {
        let g = path(5);
        assert_eq!(connector_set(&g, VertexSet::from_slice(&[1, 2]), 1).unwrap(), VertexSet::EMPTY);
        let r = connector_set(&g, VertexSet::from_slice(&[0, 4]), 1).unwrap();
        assert_eq!(r, VertexSet::from_slice(&[1, 2, 3]));
        let g = complete_bipartite(3, 3);
        let u = VertexSet::from_slice(&[0, 1]);
        let r = connector_set(&g, u, 1).unwrap();
        assert!(r.len() <= 3 && g.is_connected_within(r | u));
    }
}
