//! Search over connected vertex sets.
//!
//! Connected sets are grown from an anchor: a set `S` with excluded set `X`
//! is extended by each frontier vertex in turn, and every frontier vertex
//! tried is excluded from the later branches. Each connected set containing
//! the anchor is visited exactly once.

use crate::graph::{Graph, Target};
use crate::set::VertexSet;
use crate::solution::Incumbent;

/// Smallest connected `S` with `required ⊆ S ⊆ within` satisfying `valid`,
/// where `valid` must be closed under taking connected supersets. Ties are
/// broken towards the lexicographically smaller set. The empty set is a
/// candidate when `required` is empty.
pub fn min_connected_superset(
    g: &Graph,
    within: VertexSet,
    required: VertexSet,
    valid: &dyn Fn(VertexSet) -> bool,
) -> Option<VertexSet> {
    if !required.is_subset(within) {
        return None;
    }
    let mut search = Grow {
        g,
        within,
        required,
        valid,
        best: Incumbent::default(),
    };
    match required.first() {
        Some(anchor) => search.visit(VertexSet::singleton(anchor), VertexSet::EMPTY),
        None => {
            if valid(VertexSet::EMPTY) {
                return Some(VertexSet::EMPTY);
            }
            for v in within {
                search.visit(VertexSet::singleton(v), within.below(v));
            }
        }
    }
    search.best.best
}

/// Smallest connected `S` with `required ⊆ S ⊆ within` such that
/// `G[within - S]` has the target property.
pub fn min_connected_transversal(
    g: &Graph,
    target: Target,
    within: VertexSet,
    required: VertexSet,
) -> Option<VertexSet> {
    min_connected_superset(g, within, required, &|s| {
        g.satisfies_within(target, within - s)
    })
}

struct Grow<'a> {
    g: &'a Graph,
    within: VertexSet,
    required: VertexSet,
    valid: &'a dyn Fn(VertexSet) -> bool,
    best: Incumbent,
}

impl Grow<'_> {
    fn visit(&mut self, s: VertexSet, excluded: VertexSet) {
        let size = (s | self.required).len();
        let bound = self.best.size();
        if size > bound {
            return;
        }
        if self.required.is_subset(s) && (self.valid)(s) {
            self.best.offer(s);
            return;
        }
        if s.len() >= bound {
            return;
        }
        let frontier = (self.g.open_neighborhood(s) & self.within) - excluded;
        let mut excluded = excluded;
        for v in frontier {
            if self.best.size() <= s.len() {
                return;
            }
            self.visit(s.with(v), excluded);
            excluded.insert(v);
            if excluded.intersects(self.required) {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::oracle::exact::min_connected_transversal_subsets;

    #[test]
    fn matches_subset_engine_on_small_families() {
        let graphs = [cycle(4), cycle(5), petersen(), complete(4), path(5), star(4)];
        for g in &graphs {
            for target in [Target::Edgeless, Target::Forest, Target::Bipartite] {
                for w in [VertexSet::EMPTY, VertexSet::from_slice(&[0]), VertexSet::from_slice(&[0, 2])] {
                    let a = min_connected_transversal(g, target, g.vertices(), w);
                    let b = min_connected_transversal_subsets(g, target, g.vertices(), w);
                    assert_eq!(a, b, "{g:?} {target:?} {w:?}");
                }
            }
        }
    }

    #[test]
    fn c4_forest_with_antipodal_pair() {
        let g = cycle(4);
        let s = min_connected_transversal(&g, Target::Forest, g.vertices(), VertexSet::from_slice(&[0, 2]));
        assert_eq!(s.map(VertexSet::len), Some(3));
    }
}
