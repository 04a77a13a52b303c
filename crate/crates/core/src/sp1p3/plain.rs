//! Feedback vertex set and odd cycle transversal via the largest induced
//! forest or bipartite subgraph.
//!
//! A largest kept set either has a component with at least `c(s)` vertices,
//! in which case it is connected and its shape can be guessed from a few
//! vertices, or it has a small component `T`; then `T` is guessed and the
//! rest is solved in `G - N[T]`, which is ((s-1)P1+P3)-free.

use crate::cograph::{cotree_within, max_induced_within};
use crate::error::Result;
use crate::graph::{Graph, Problem, Target};
use crate::oracle::{checked, ExactSubroutines, Subroutines};
use crate::set::VertexSet;

use super::search::{for_each_connected_set, for_each_independent_set, single_attachment};
use super::{CaseTrace, ClassParam, Collector, Largest, Recorder};

struct Ctx<'a> {
    g: &'a Graph,
    provider: &'a dyn Subroutines,
}

impl Ctx<'_> {
    fn mis(&self, within: VertexSet) -> VertexSet {
        self.provider.max_independent_set(self.g, within)
    }

    fn dp(&self, mask: VertexSet, target: Target) -> VertexSet {
        if mask.is_empty() {
            return mask;
        }
        max_induced_within(&cotree_within(self.g, mask), mask, target)
    }

    /// Largest induced forest of `G[mask]`.
    fn max_forest(&self, mask: VertexSet, p: ClassParam, out: &mut dyn Collector) {
        let g = self.g;
        out.begin("empty");
        out.offer(VertexSet::EMPTY, &|| "empty".into());
        if mask.is_empty() {
            return;
        }
        if p.s() == 0 {
            out.begin("cograph");
            out.offer(self.dp(mask, Target::Forest), &|| "cotree".into());
            return;
        }
        out.begin("large tree");
        let acyclic = |s: VertexSet| g.is_acyclic_within(s);
        for_each_connected_set(g, mask, p.tree_internal_bound(), &acyclic, &mut |u| {
            let leaves = single_attachment(g, mask - u, u);
            if u.len() + leaves.len() <= out.floor() {
                return;
            }
            let kept = u | self.mis(leaves);
            out.offer(kept, &|| format!("inner vertices {u}"));
        });
        out.begin("small component");
        let lower = p.lower();
        for_each_connected_set(g, mask, p.c() - 1, &acyclic, &mut |t| {
            let rest = mask - g.closed_neighborhood(t);
            if t.len() + rest.len() <= out.floor() {
                return;
            }
            let mut inner = Largest::new(rest, &acyclic);
            self.max_forest(rest, lower, &mut inner);
            let kept = t | inner.best.expect("the empty forest is always offered");
            out.offer(kept, &|| format!("component {t}"));
        });
    }

    /// Largest induced bipartite subgraph of `G[mask]`.
    fn max_bipartite(&self, mask: VertexSet, p: ClassParam, out: &mut dyn Collector) {
        let g = self.g;
        out.begin("empty");
        out.offer(VertexSet::EMPTY, &|| "empty".into());
        if mask.is_empty() {
            return;
        }
        if p.s() == 0 {
            out.begin("cograph");
            out.offer(self.dp(mask, Target::Bipartite), &|| "cotree".into());
            return;
        }
        out.begin("star");
        for x in mask {
            let nb = g.neighbors(x) & mask;
            if 1 + nb.len() <= out.floor() {
                continue;
            }
            out.offer(self.mis(nb).with(x), &|| format!("centre {x}"));
        }
        out.begin("edge");
        for x in mask {
            for y in (g.neighbors(x) & mask).above(x) {
                self.edge_guesses(mask, p, x, y, out);
            }
        }
        out.begin("small component");
        let lower = p.lower();
        let bip = |s: VertexSet| g.is_bipartite_within(s);
        for_each_connected_set(g, mask, p.c() - 1, &bip, &mut |l| {
            let rest = mask - g.closed_neighborhood(l);
            if l.len() + rest.len() <= out.floor() {
                return;
            }
            let mut inner = Largest::new(rest, &bip);
            self.max_bipartite(rest, lower, &mut inner);
            let kept = l | inner.best.expect("the empty set is always offered");
            out.offer(kept, &|| format!("component {l}"));
        });
    }

    /// `x` and `y` on opposite sides, `X'` and `Y'` the few vertices of each
    /// side missing the opposite endpoint. Everything else on the `X` side is
    /// a neighbour of `y` avoiding `N({x} ∪ X')`, and symmetrically.
    fn edge_guesses(&self, mask: VertexSet, p: ClassParam, x: usize, y: usize, out: &mut dyn Collector) {
        let g = self.g;
        let far = mask - g.closed_neighbors(x) - g.closed_neighbors(y);
        let cap = p.s() - 1;
        for_each_independent_set(g, far, 0, cap, &mut |xs| {
            for_each_independent_set(g, far - xs, 0, cap, &mut |ys| {
                let used = xs | ys | VertexSet::singleton(x).with(y);
                let x_side = xs.with(x);
                let y_side = ys.with(y);
                let pool_x = (g.neighbors(y) & mask) - g.open_neighborhood(x_side) - used;
                let pool_y = (g.neighbors(x) & mask) - g.open_neighborhood(y_side) - used;
                if used.len() + pool_x.len() + pool_y.len() <= out.floor() {
                    return;
                }
                let kept = used | self.mis(pool_x) | self.mis(pool_y);
                out.offer(kept, &|| format!("edge {x}-{y}, X' {xs}, Y' {ys}"));
            });
        });
    }
}

fn run(
    g: &Graph,
    s: usize,
    target: Target,
    provider: &dyn Subroutines,
) -> Result<(crate::solution::TransversalSolution, CaseTrace)> {
    let p = ClassParam::new(s);
    p.check(g)?;
    let problem = Problem::transversal(target, false);
    let all = g.vertices();
    let valid = |t: VertexSet| t.is_subset(all) && g.satisfies_within(target, all - t);
    let mut rec = Recorder::new(problem, all, &valid);
    let cx = Ctx { g, provider };
    match target {
        Target::Forest => cx.max_forest(all, p, &mut rec),
        Target::Bipartite => cx.max_bipartite(all, p, &mut rec),
        Target::Edgeless => unreachable!("vertex cover is not solved here"),
    }
    let (best, trace) = rec.finish();
    let best = best.expect("the whole vertex set is always a transversal");
    Ok((checked(g, problem, best, VertexSet::EMPTY), trace))
}

/// Minimum feedback vertex set of an (sP1+P3)-free graph. The complement is
/// a maximum induced forest (see `TransversalSolution::complement_in`).
pub fn fvs_sp1p3(g: &Graph, s: usize) -> Result<crate::solution::TransversalSolution> {
    fvs_sp1p3_with(g, s, &ExactSubroutines)
}

pub fn fvs_sp1p3_with(
    g: &Graph,
    s: usize,
    provider: &dyn Subroutines,
) -> Result<crate::solution::TransversalSolution> {
    Ok(run(g, s, Target::Forest, provider)?.0)
}

pub fn fvs_sp1p3_traced(g: &Graph, s: usize) -> Result<(crate::solution::TransversalSolution, CaseTrace)> {
    run(g, s, Target::Forest, &ExactSubroutines)
}

/// Minimum odd cycle transversal of an (sP1+P3)-free graph.
pub fn oct_sp1p3(g: &Graph, s: usize) -> Result<crate::solution::TransversalSolution> {
    oct_sp1p3_with(g, s, &ExactSubroutines)
}

pub fn oct_sp1p3_with(
    g: &Graph,
    s: usize,
    provider: &dyn Subroutines,
) -> Result<crate::solution::TransversalSolution> {
    Ok(run(g, s, Target::Bipartite, provider)?.0)
}

pub fn oct_sp1p3_traced(g: &Graph, s: usize) -> Result<(crate::solution::TransversalSolution, CaseTrace)> {
    run(g, s, Target::Bipartite, &ExactSubroutines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::oracle;

    #[test]
    fn small_examples() {
        assert_eq!(fvs_sp1p3(&cycle(4), 1).unwrap().objective(), 1);
        for s in 0..4 {
            assert_eq!(fvs_sp1p3(&complete(5), s).unwrap().objective(), 3);
        }
        for s in 1..4 {
            assert_eq!(oct_sp1p3(&complete_bipartite(3, 3), s).unwrap().objective(), 0);
        }
        assert_eq!(oct_sp1p3(&complete(4), 1).unwrap().objective(), 2);
        assert!(fvs_sp1p3(&path(4), 0).is_err());
    }

    #[test]
    fn trace_optimum_is_result() {
        let g = join(&cycle(4), &Graph::empty(2).unwrap());
        for s in 1..3 {
            let (sol, trace) = fvs_sp1p3_traced(&g, s).unwrap();
            assert_eq!(trace.optimum(), Some(sol.vertices));
            assert_eq!(sol.objective(), oracle::min_fvs(&g).objective());
            let (sol, trace) = oct_sp1p3_traced(&g, s).unwrap();
            assert_eq!(trace.optimum(), Some(sol.vertices));
            assert_eq!(sol.objective(), oracle::min_oct(&g).objective());
        }
    }
}
