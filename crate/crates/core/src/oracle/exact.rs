//! Subset enumeration: the simplest possible exact engine.

use crate::graph::{Graph, Target};
use crate::set::{for_each_subset_of_size, VertexSet};

/// Smallest `S` with `required ⊆ S ⊆ within` such that `G[within - S]`
/// has the target property. Subsets are tried by increasing size in
/// lexicographic order, so the result is the lexicographically first optimum.
pub fn min_transversal_subsets(
    g: &Graph,
    target: Target,
    within: VertexSet,
    required: VertexSet,
) -> VertexSet {
    let pool = within - required;
    let mut found = None;
    for k in 0..=pool.len() {
        let hit = for_each_subset_of_size(pool, k, &mut |t| {
            if g.satisfies_within(target, pool - t) {
                found = Some(t | required);
                true
            } else {
                false
            }
        });
        if hit {
            break;
        }
    }
    found.expect("deleting every vertex always works")
}

/// Smallest connected `S` with `required ⊆ S ⊆ within` such that
/// `G[within - S]` has the target property, by plain subset enumeration.
pub fn min_connected_transversal_subsets(
    g: &Graph,
    target: Target,
    within: VertexSet,
    required: VertexSet,
) -> Option<VertexSet> {
    let pool = within - required;
    let mut found = None;
    for k in 0..=pool.len() {
        let hit = for_each_subset_of_size(pool, k, &mut |t| {
            let s = t | required;
            if g.is_connected_within(s) && g.satisfies_within(target, within - s) {
                found = Some(s);
                true
            } else {
                false
            }
        });
        if hit {
            break;
        }
    }
    found
}
