//! Enumeration helpers shared by the guessing steps.

use crate::graph::Graph;
use crate::set::{for_each_subset_up_to, VertexSet};

/// Calls `f` on every nonempty connected `S ⊆ mask` with `|S| ≤ max` and
/// `keep(S)`. `keep` must be inherited by connected subsets, since a set
/// failing it is not extended.
pub(crate) fn for_each_connected_set(
    g: &Graph,
    mask: VertexSet,
    max: usize,
    keep: &dyn Fn(VertexSet) -> bool,
    f: &mut dyn FnMut(VertexSet),
) {
    fn rec(
        g: &Graph,
        mask: VertexSet,
        max: usize,
        keep: &dyn Fn(VertexSet) -> bool,
        f: &mut dyn FnMut(VertexSet),
        set: VertexSet,
        mut frontier: VertexSet,
        mut banned: VertexSet,
    ) {
        f(set);
        if set.len() == max {
            return;
        }
        while let Some(w) = frontier.first() {
            frontier.remove(w);
            let next = set.with(w);
            if keep(next) {
                let grown = (frontier | g.neighbors(w)) & mask;
                rec(g, mask, max, keep, f, next, grown - next - banned, banned);
            }
            banned.insert(w);
        }
    }
    if max == 0 {
        return;
    }
    for v in mask {
        let single = VertexSet::singleton(v);
        if !keep(single) {
            continue;
        }
        let banned = mask.below(v).with(v);
        rec(g, mask, max, keep, f, single, (g.neighbors(v) & mask) - banned, banned);
    }
}

/// Calls `f` on every independent `S ⊆ pool` with `min ≤ |S| ≤ max`, in
/// lexicographic order of the members.
pub(crate) fn for_each_independent_set(
    g: &Graph,
    pool: VertexSet,
    min: usize,
    max: usize,
    f: &mut dyn FnMut(VertexSet),
) {
    fn rec(g: &Graph, pool: VertexSet, acc: VertexSet, min: usize, max: usize, f: &mut dyn FnMut(VertexSet)) {
        if acc.len() >= min {
            f(acc);
        }
        if acc.len() == max || acc.len() + pool.len() < min {
            return;
        }
        for v in pool {
            rec(g, pool.above(v) - g.neighbors(v), acc.with(v), min, max, f);
        }
    }
    rec(g, pool, VertexSet::EMPTY, min, max, f);
}

/// Calls `f` on every `R ⊆ pool` with `|R| ≤ max` such that `G[base ∪ R]`
/// is connected and no single vertex of `R` can be dropped. Some optimum
/// that contains a connector also contains a minimal one, so these are the
/// only connectors worth guessing.
pub(crate) fn for_each_connector(
    g: &Graph,
    base: VertexSet,
    pool: VertexSet,
    max: usize,
    f: &mut dyn FnMut(VertexSet),
) {
    let pool = pool - base;
    if g.is_connected_within(base) {
        f(VertexSet::EMPTY);
        return;
    }
    let start = base.first().expect("disconnected base is nonempty");
    let reach = g.reach_within(start, base | pool);
    if !base.is_subset(reach) {
        return;
    }
    let pool = pool & reach;
    for_each_subset_up_to(pool, max, &mut |r| {
        let all = base | r;
        if g.is_connected_within(all) && r.iter().all(|x| !g.is_connected_within(all.without(x))) {
            f(r);
        }
        false
    });
}

/// Vertices of `pool` with exactly one neighbour in `u`.
pub(crate) fn single_attachment(g: &Graph, pool: VertexSet, u: VertexSet) -> VertexSet {
    pool.iter().filter(|&v| (g.neighbors(v) & u).len() == 1).collect()
}

/// `G[mask]` has maximum degree at most one.
pub(crate) fn is_matching_like(g: &Graph, mask: VertexSet) -> bool {
    mask.iter().all(|v| (g.neighbors(v) & mask).len() <= 1)
}

/// Components of `G[mask]`, or `None` if one of them is not a clique.
pub(crate) fn clique_components(g: &Graph, mask: VertexSet) -> Option<Vec<VertexSet>> {
    let comps = g.components_within(mask);
    comps.iter().all(|&k| g.is_clique(k)).then_some(comps)
}

/// Whether `u` lies inside one component of `G[mask]`.
pub(crate) fn in_one_component(g: &Graph, u: VertexSet, mask: VertexSet) -> bool {
    match u.first() {
        None => true,
        Some(v) => u.is_subset(g.reach_within(v, mask)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn brute_connected(g: &Graph, mask: VertexSet, max: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        for_each_subset_up_to(mask, max, &mut |s| {
            if !s.is_empty() && g.is_connected_within(s) {
                out.push(s);
            }
            false
        });
        out.sort();
        out
    }

    #[test]
    fn connected_sets_match_brute_force() {
        for g in [petersen(), cycle(6), complete(5), star(4), path(7)] {
            for max in 1..=5 {
                let mask = g.vertices();
                let mut got = Vec::new();
                for_each_connected_set(&g, mask, max, &|_| true, &mut |s| got.push(s));
                got.sort();
                assert_eq!(got, brute_connected(&g, mask, max));
            }
        }
    }

    #[test]
    fn connected_trees_are_pruned() {
        let g = complete(4);
        let mut got = Vec::new();
        for_each_connected_set(&g, g.vertices(), 4, &|s| g.is_acyclic_within(s), &mut |s| got.push(s));
        // 4 singletons and 6 edges; every triangle is cut off.
        assert_eq!(got.len(), 10);
    }

    #[test]
    fn independent_sets_counted() {
        let g = cycle(5);
        let mut n = 0;
        for_each_independent_set(&g, g.vertices(), 0, 5, &mut |_| n += 1);
        // empty + 5 singletons + 5 non-adjacent pairs
        assert_eq!(n, 11);
        let mut n = 0;
        for_each_independent_set(&g, g.vertices(), 2, 2, &mut |_| n += 1);
        assert_eq!(n, 5);
    }

    #[test]
    fn connectors_are_minimal() {
        let g = path(5);
        let mut got = Vec::new();
        for_each_connector(&g, VertexSet::from_slice(&[0, 4]), g.vertices(), 3, &mut |r| got.push(r));
        assert_eq!(got, vec![VertexSet::from_slice(&[1, 2, 3])]);
        let mut got = Vec::new();
        for_each_connector(&g, VertexSet::from_slice(&[0, 4]), g.vertices(), 2, &mut |r| got.push(r));
        assert!(got.is_empty());
        let c = cycle(6);
        let mut got = Vec::new();
        for_each_connector(&c, VertexSet::from_slice(&[0, 3]), c.vertices(), 4, &mut |r| got.push(r));
        assert_eq!(got, vec![VertexSet::from_slice(&[1, 2]), VertexSet::from_slice(&[4, 5])]);
    }
}
