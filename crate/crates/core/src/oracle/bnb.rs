//! Branch and bound for feedback vertex set and odd cycle transversal.
//!
//! Every solution must hit each cycle (odd cycle), so the search takes a
//! shortest one, which is chordless, and branches on which of its vertices
//! to delete. Vertices already rejected in sibling branches are marked
//! undeletable. The budget `k` grows by one until a solution exists; a
//! greedy packing of vertex-disjoint cycles gives the starting value and
//! prunes nodes.

use std::sync::atomic::{AtomicBool, Ordering};

use crate::error::{Error, Result};
use crate::graph::{CycleParity, Graph, Target};
use crate::set::VertexSet;

/// Optional limits for long searches.
#[derive(Clone, Copy, Debug, Default)]
pub struct Limits<'a> {
    /// Maximum number of search nodes before giving up.
    pub node_budget: Option<u64>,
    /// Checked once per node; the search stops when it reads `true`.
    pub cancel: Option<&'a AtomicBool>,
}

fn parity(target: Target) -> CycleParity {
    match target {
        Target::Forest => CycleParity::Any,
        Target::Bipartite => CycleParity::Odd,
        Target::Edgeless => unreachable!("vertex cover goes through the MIS search"),
    }
}

/// Minimum `S ⊆ within` such that `G[within - S]` is a forest or bipartite.
pub fn min_cycle_transversal(g: &Graph, target: Target, within: VertexSet) -> VertexSet {
    min_cycle_transversal_limited(g, target, within, Limits::default())
        .expect("no limits were set")
}

pub fn min_cycle_transversal_limited(
    g: &Graph,
    target: Target,
    within: VertexSet,
    limits: Limits<'_>,
) -> Result<VertexSet> {
    let mut search = Bnb {
        g,
        parity: parity(target),
        limits,
        nodes: 0,
    };
    let mask = search.strip(within);
    let mut k = search.packing(mask);
    loop {
        if let Some(s) = search.branch(mask, VertexSet::EMPTY, k)? {
            return Ok(s);
        }
        k += 1;
    }
}

struct Bnb<'a> {
    g: &'a Graph,
    parity: CycleParity,
    limits: Limits<'a>,
    nodes: u64,
}

impl Bnb<'_> {
    /// Removes vertices that lie on no cycle of the kind searched for:
    /// repeatedly, those of degree at most one inside the mask.
    fn strip(&self, mut mask: VertexSet) -> VertexSet {
        loop {
            let low: VertexSet = mask
                .iter()
                .filter(|&v| (self.g.neighbors(v) & mask).len() <= 1)
                .collect();
            if low.is_empty() {
                return mask;
            }
            mask -= low;
        }
    }

    /// Size of a greedy packing of vertex-disjoint cycles.
    fn packing(&self, mut mask: VertexSet) -> usize {
        let mut count = 0;
        while let Some(c) = self.g.shortest_cycle_within(mask, self.parity) {
            count += 1;
            mask -= c.into_iter().collect();
        }
        count
    }

    fn branch(
        &mut self,
        mask: VertexSet,
        fixed: VertexSet,
        k: usize,
    ) -> Result<Option<VertexSet>> {
        self.nodes += 1;
        if let Some(budget) = self.limits.node_budget {
            if self.nodes > budget {
                return Err(Error::SizeLimit(format!(
                    "branch and bound exceeded {budget} nodes"
                )));
            }
        }
        if let Some(flag) = self.limits.cancel {
            if flag.load(Ordering::Relaxed) {
                return Err(Error::SizeLimit("search cancelled".into()));
            }
        }
        let mask = self.strip(mask);
        let Some(cycle) = self.g.shortest_cycle_within(mask, self.parity) else {
            return Ok(Some(VertexSet::EMPTY));
        };
        if k == 0 || self.packing(mask) > k {
            return Ok(None);
        }
        let mut fixed_here = fixed;
        for v in cycle {
            if fixed_here.contains(v) {
                continue;
            }
            if let Some(s) = self.branch(mask.without(v), fixed_here, k - 1)? {
                return Ok(Some(s.with(v)));
            }
            fixed_here.insert(v);
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::oracle::exact::min_transversal_subsets;

    #[test]
    fn petersen_fvs_matches_subsets() {
        let g = petersen();
        let bnb = min_cycle_transversal(&g, Target::Forest, g.vertices());
        let brute = min_transversal_subsets(&g, Target::Forest, g.vertices(), VertexSet::EMPTY);
        assert_eq!(brute.len(), 3);
        assert_eq!(bnb.len(), 3);
        assert!(g.remainder_satisfies(Target::Forest, bnb));
    }

    #[test]
    fn small_values() {
        let k4 = complete(4);
        assert_eq!(min_cycle_transversal(&k4, Target::Forest, k4.vertices()).len(), 2);
        assert_eq!(min_cycle_transversal(&k4, Target::Bipartite, k4.vertices()).len(), 2);
        let c4 = cycle(4);
        assert_eq!(min_cycle_transversal(&c4, Target::Forest, c4.vertices()).len(), 1);
        assert_eq!(min_cycle_transversal(&c4, Target::Bipartite, c4.vertices()).len(), 0);
    }

    #[test]
    fn node_budget_is_enforced() {
        let g = petersen();
        let limits = Limits {
            node_budget: Some(1),
            cancel: None,
        };
        let err = min_cycle_transversal_limited(&g, Target::Forest, g.vertices(), limits);
        assert!(matches!(err, Err(Error::SizeLimit(_))));
    }
}
