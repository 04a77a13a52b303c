//! Maximum independent sets by bitset branch and bound.

use crate::graph::Graph;
use crate::set::VertexSet;

/// A maximum independent set of `G[within]`.
///
/// Vertices of degree at most one are taken greedily (some optimum always
/// contains them); otherwise the search branches on a vertex of maximum
/// degree. The bound is a greedy clique cover of the candidates.
pub fn max_independent_set_within(g: &Graph, within: VertexSet) -> VertexSet {
    let mut search = MisSearch {
        g,
        best: VertexSet::EMPTY,
    };
    search.run(within, VertexSet::EMPTY);
    search.best
}

struct MisSearch<'a> {
    g: &'a Graph,
    best: VertexSet,
}

impl MisSearch<'_> {
    fn run(&mut self, mut cand: VertexSet, mut cur: VertexSet) {
        loop {
            if cur.len() + cand.len() <= self.best.len() {
                return;
            }
            // Forced moves: isolated and pendant vertices.
            let mut forced = None;
            let mut pivot = None;
            let mut pivot_deg = 0;
            for v in cand {
                let d = (self.g.neighbors(v) & cand).len();
                if d <= 1 {
                    forced = Some(v);
                    break;
                }
                if d > pivot_deg {
                    pivot_deg = d;
                    pivot = Some(v);
                }
            }
            if let Some(v) = forced {
                cur.insert(v);
                cand -= self.g.closed_neighbors(v);
                continue;
            }
            let Some(v) = pivot else {
                // Empty candidate set.
                if cur.len() > self.best.len() {
                    self.best = cur;
                }
                return;
            };
            if cur.len() + clique_cover_bound(self.g, cand) <= self.best.len() {
                return;
            }
            self.run(cand - self.g.closed_neighbors(v), cur.with(v));
            cand.remove(v);
        }
    }
}

/// Number of cliques in a greedy clique cover of `G[cand]`, an upper bound
/// on its independence number.
fn clique_cover_bound(g: &Graph, mut cand: VertexSet) -> usize {
    let mut count = 0;
    while let Some(v) = cand.first() {
        let mut common = g.neighbors(v) & cand;
        cand.remove(v);
        while let Some(u) = common.first() {
            cand.remove(u);
            common &= g.neighbors(u);
        }
        count += 1;
    }
    count
}

/// Largest independent set of `G[within]` by exhaustive enumeration,
/// in increasing size; used to cross-check the search above.
pub fn max_independent_set_brute(g: &Graph, within: VertexSet) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    for k in (0..=within.len()).rev() {
        let found = crate::set::for_each_subset_of_size(within, k, &mut |s| {
            if g.is_independent_set(s) {
                best = s;
                true
            } else {
                false
            }
        });
        if found {
            break;
        }
    }
    best
}

/// Maximum independent set of `G[within]` computed as the best of `{v}`
/// plus `inner` on `within - N[v]`, over all `v`, and the empty set.
pub fn mis_p1_boost_within(
    g: &Graph,
    within: VertexSet,
    inner: &dyn Fn(&Graph, VertexSet) -> VertexSet,
) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    for v in within {
        let rest = within - g.closed_neighbors(v);
        let s = inner(g, rest).with(v);
        debug_assert!(g.is_independent_set(s) && s.is_subset(within));
        if s.len() > best.len() {
            best = s;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn small_values() {
        assert_eq!(max_independent_set_within(&complete(3), VertexSet::full(3)).len(), 1);
        assert_eq!(max_independent_set_within(&cycle(5), VertexSet::full(5)).len(), 2);
        assert_eq!(max_independent_set_within(&path(1), VertexSet::full(1)).len(), 1);
        let g = petersen();
        let brute = max_independent_set_brute(&g, g.vertices()).len();
        assert_eq!(brute, 4);
        assert_eq!(max_independent_set_within(&g, g.vertices()).len(), 4);
    }

    #[test]
    fn boost_on_two_triangles() {
        let g = disjoint_union(&complete(3), &complete(3));
        let s = mis_p1_boost_within(&g, g.vertices(), &max_independent_set_within);
        assert_eq!(s.len(), 2);
        assert!(g.is_independent_set(s));
    }
}
