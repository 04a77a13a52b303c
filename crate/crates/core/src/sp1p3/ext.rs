//! Connected feedback vertex set and connected odd cycle transversal
//! containing a given set `W`, on (sP1+P3)-free graphs.
//!
//! A kept set `F` is good when it avoids `W` and `G - F` is connected. Both
//! solvers first reduce to the one component that needs solution vertices,
//! then search for a largest good kept set of that component.

use crate::cograph::{cfvs_extension_p4free_with, coct_extension_p4free_with};
use crate::error::Result;
use crate::graph::{Graph, Problem, Target};
use crate::oracle::{checked, relevant_component, ExactSubroutines, Subroutines};
use crate::set::{for_each_subset_up_to, VertexSet};
use crate::solution::TransversalSolution;

use super::search::{
    clique_components, for_each_connected_set, for_each_connector, for_each_independent_set, in_one_component,
    is_matching_like, single_attachment,
};
use super::{CaseTrace, ClassParam, Recorder, TraceStep};

struct Ctx<'a> {
    g: &'a Graph,
    comp: VertexSet,
    w: VertexSet,
    p: ClassParam,
    target: Target,
    provider: &'a dyn Subroutines,
}

impl Ctx<'_> {
    fn cvc(&self, within: VertexSet, required: VertexSet) -> Option<VertexSet> {
        self.provider.connected_vertex_cover_ext(self.g, within, required)
    }

    fn satisfies(&self, mask: VertexSet) -> bool {
        self.g.satisfies_within(self.target, mask)
    }

    /// Keep at most two vertices of every clique of `G[comp - l - s]` and
    /// move the rest into the solution, each moved group attached to `s`.
    /// `None` if the remainder is not a union of cliques or a clique cannot
    /// be attached.
    fn trim_cliques(&self, l: VertexSet, s: VertexSet) -> Option<VertexSet> {
        let g = self.g;
        let mut out = s;
        for k in clique_components(g, self.comp - l - s)? {
            if k.len() <= 2 {
                continue;
            }
            let anchor = (k & g.open_neighborhood(s)).first()?;
            let keep: VertexSet = k.without(anchor).iter().take(2).collect();
            out |= k - keep;
        }
        Some(out)
    }

    /// Kept sets with `s` small components `L`, each of at most `cap`
    /// vertices. `N(L)` and `W` are forced into the solution; a connector
    /// joins them, and what is left outside `L` is a union of cliques.
    fn small_components(&self, cap: usize, rec: &mut Recorder) {
        let g = self.g;
        let comp = self.comp;
        let free = comp - self.w;
        let mut pieces = Vec::new();
        for_each_connected_set(g, free, cap, &|x| self.satisfies(x), &mut |x| pieces.push(x));
        let bound = self.p.connector_bound();
        let mut chosen = Vec::with_capacity(self.p.s());
        self.pick_pieces(&pieces, 0, VertexSet::EMPTY, &mut chosen, &mut |l| {
            if !g.is_connected_within(comp - l) {
                return;
            }
            let u = g.open_neighborhood(l) & comp;
            let base = u | self.w;
            if base.len() >= rec.bound() {
                return;
            }
            if self.w.is_subset(u) && g.is_connected_within(u) && self.satisfies(comp - u) {
                rec.offer(u, &|| format!("L {l}, S = N(L)"));
                return;
            }
            for_each_connector(g, base, comp - l - base, bound, &mut |r| {
                let s = base | r;
                if s.len() >= rec.bound() {
                    return;
                }
                if self.satisfies(comp - s) {
                    rec.offer(s, &|| format!("L {l}, R {r}"));
                } else if let Some(t) = self.trim_cliques(l, s) {
                    rec.offer(t, &|| format!("L {l}, R {r}, cliques trimmed"));
                }
            });
        });
    }

    /// Chooses `s` pairwise anti-complete pieces in increasing index order.
    fn pick_pieces(
        &self,
        pieces: &[VertexSet],
        from: usize,
        union: VertexSet,
        chosen: &mut Vec<VertexSet>,
        f: &mut dyn FnMut(VertexSet),
    ) {
        if chosen.len() == self.p.s() {
            f(union);
            return;
        }
        let blocked = self.g.closed_neighborhood(union);
        for (i, &x) in pieces.iter().enumerate().skip(from) {
            if x.intersects(blocked) {
                continue;
            }
            chosen.push(x);
            self.pick_pieces(pieces, i + 1, union | x, chosen, f);
            chosen.pop();
        }
    }

    fn cfvs(&self, rec: &mut Recorder) {
        let g = self.g;
        let comp = self.comp;
        let free = comp - self.w;
        let p = self.p;

        // One large tree U plus up to s - 1 components on one or two vertices.
        rec.begin("large tree");
        let acyclic = |x: VertexSet| g.is_acyclic_within(x);
        for_each_connected_set(g, free, p.tree_internal_bound(), &acyclic, &mut |u| {
            let avail = free - g.closed_neighborhood(u);
            for_each_subset_up_to(avail, 2 * (p.s() - 1), &mut |u2| {
                if !is_matching_like(g, u2) {
                    return false;
                }
                let rest = comp - u - u2;
                let leaves = single_attachment(g, rest - self.w, u) - g.open_neighborhood(u2);
                if comp.len() - (u.len() + u2.len() + leaves.len()) >= rec.bound() {
                    return false;
                }
                if let Some(s) = self.cvc(rest, rest - leaves) {
                    rec.offer(s, &|| format!("U {u}, U' {u2}"));
                }
                false
            });
        });

        // At most s - 1 components, each with fewer than c(s) vertices.
        rec.begin("few small components");
        let most = (p.s() - 1) * (p.c() - 1);
        for_each_subset_up_to(free, most, &mut |f| {
            if comp.len() - f.len() < rec.bound() && g.is_acyclic_within(f) {
                rec.offer(comp - f, &|| format!("F {f}"));
            }
            false
        });

        // At least s components with fewer than c(s) vertices each.
        rec.begin("many small components");
        self.small_components(p.c() - 1, rec);
    }

    fn coct(&self, rec: &mut Recorder) {
        let g = self.g;
        let comp = self.comp;
        let free = comp - self.w;
        let p = self.p;

        // One side has at most s vertices; the other side is the complement
        // of a connected vertex cover.
        rec.begin("small side");
        for_each_independent_set(g, free, 0, p.s(), &mut |x| {
            if let Some(s) = self.cvc(comp - x, self.w) {
                rec.offer(s, &|| format!("X {x}"));
            }
        });

        rec.begin("many small components");
        self.small_components(2, rec);

        rec.begin("both sides large");
        for_each_independent_set(g, free, p.s() + 1, p.s() + 1, &mut |x1| {
            let rest = free - x1;
            for_each_independent_set(g, rest.above(x1.first().expect("nonempty")), p.s() + 1, p.s() + 1, &mut |y1| {
                let both = x1 | y1;
                if both.iter().all(|v| (g.neighbors(v) & both).len() < 2) {
                    return;
                }
                self.sides(x1, y1, rec);
            });
        });
    }

    /// Both sides seeded with `s + 1` vertices; every other vertex is sorted
    /// by which seeds it sees.
    fn sides(&self, x1: VertexSet, y1: VertexSet, rec: &mut Recorder) {
        let g = self.g;
        let comp = self.comp;
        let nx = g.open_neighborhood(x1) & comp;
        let ny = g.open_neighborhood(y1) & comp;
        let u = (nx & ny) | self.w;
        let vx = nx - y1 - ny - self.w;
        let vy = ny - x1 - nx - self.w;
        let z = comp - x1 - y1 - u - vx - vy;
        let cap = self.p.s() - 1;
        for_each_independent_set(g, z, 0, cap, &mut |zx| {
            for_each_independent_set(g, z - zx, 0, cap, &mut |zy| {
                let xs = x1 | zx;
                let ys = y1 | zy;
                let nxs = g.open_neighborhood(xs);
                let nys = g.open_neighborhood(ys);
                let mut u2 = u | (z - zx - zy);
                u2 |= (vx | vy) & nxs & nys;
                let vx2 = vx - u2;
                let vy2 = vy - u2;
                let outside = comp - xs - ys;
                if !in_one_component(g, u2, outside) {
                    return;
                }
                let guess = || format!("X' {xs}, Y' {ys}");
                for_each_connector(g, u2, vx2 | vy2, self.p.connector_bound(), &mut |r| {
                    self.clique_sides(xs, ys, u2 | r, vx2 - r, vy2 - r, rec, &guess);
                });
            });
        });
    }

    /// `vx` and `vy` must be unions of cliques. Each clique contributes at
    /// most one vertex to the bipartite side opposite its seeds.
    #[allow(clippy::too_many_arguments)]
    fn clique_sides(
        &self,
        xs: VertexSet,
        ys: VertexSet,
        u: VertexSet,
        vx: VertexSet,
        vy: VertexSet,
        rec: &mut Recorder,
        guess: &dyn Fn() -> String,
    ) {
        let g = self.g;
        let comp = self.comp;
        let (Some(cx), Some(cy)) = (clique_components(g, vx), clique_components(g, vy)) else {
            return;
        };
        let upper = xs.len() + ys.len() + cx.len() + cy.len();
        if comp.len() - upper >= rec.bound() {
            return;
        }

        // No edges between the leftovers of vx and vy: each clique with a
        // leftover must reach u directly.
        let nu = g.open_neighborhood(u);
        let mut kept = xs | ys;
        let mut ok = true;
        for &k in cx.iter().chain(&cy) {
            let touching = k & nu;
            let pick = if k.len() == 1 || u.is_empty() || touching.len() >= 2 {
                k.first()
            } else if touching.len() == 1 {
                (k - touching).first()
            } else {
                None
            };
            match pick {
                Some(v) => kept.insert(v),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            rec.offer(comp - kept, &|| format!("{}, one per clique", guess()));
        }

        // Leftovers joined through an edge xy between vx and vy.
        let bound = self.p.connector_bound();
        let extra = 2 * self.p.s() - 2;
        for x in vx {
            for y in g.neighbors(x) & vy {
                let u2 = u.with(x).with(y);
                let kx = clique_components(g, vx.without(x)).expect("cliques minus a vertex");
                let ky = clique_components(g, vy.without(y)).expect("cliques minus a vertex");
                let bad: Vec<(VertexSet, bool)> = kx
                    .iter()
                    .filter(|k| !k.is_subset(g.neighbors(y)))
                    .map(|&k| (k, true))
                    .chain(ky.iter().filter(|k| !k.is_subset(g.neighbors(x))).map(|&k| (k, false)))
                    .collect();
                let good: VertexSet = kx
                    .iter()
                    .chain(&ky)
                    .filter(|k| !bad.iter().any(|(b, _)| b == *k))
                    .fold(VertexSet::EMPTY, |acc, &k| acc | k);
                let all_bad = bad.iter().fold(VertexSet::EMPTY, |acc, (k, _)| acc | *k);
                pick_from_bad(&bad, 0, extra, VertexSet::EMPTY, VertexSet::EMPTY, &mut |to_y, to_x| {
                    let xs2 = xs | to_x;
                    let ys2 = ys | to_y;
                    let u3 = u2 | (all_bad - to_x - to_y);
                    if !in_one_component(g, u3, comp - xs2 - ys2) {
                        return;
                    }
                    for_each_connector(g, u3, good, bound, &mut |r| {
                        let rest = good - r;
                        let mut kept = xs2 | ys2;
                        for k in g.components_within(rest & vx).into_iter().chain(g.components_within(rest & vy)) {
                            kept.insert(k.first().expect("nonempty"));
                        }
                        if comp.len() - kept.len() < rec.bound() {
                            rec.offer(comp - kept, &|| format!("{}, edge {x}-{y}, moved {}, R {r}", guess(), to_x | to_y));
                        }
                    });
                });
            }
        }
    }
}

/// Chooses at most `left` vertices from distinct bad cliques. A vertex from
/// a clique of `vx` (flag `true`) joins the `Y` side, one from `vy` joins `X`.
fn pick_from_bad(
    bad: &[(VertexSet, bool)],
    idx: usize,
    left: usize,
    to_y: VertexSet,
    to_x: VertexSet,
    f: &mut dyn FnMut(VertexSet, VertexSet),
) {
    if idx == bad.len() {
        f(to_y, to_x);
        return;
    }
    pick_from_bad(bad, idx + 1, left, to_y, to_x, f);
    if left == 0 {
        return;
    }
    let (k, from_vx) = bad[idx];
    for v in k {
        if from_vx {
            pick_from_bad(bad, idx + 1, left - 1, to_y.with(v), to_x, f);
        } else {
            pick_from_bad(bad, idx + 1, left - 1, to_y, to_x.with(v), f);
        }
    }
}

fn run(
    g: &Graph,
    w: VertexSet,
    s: usize,
    target: Target,
    provider: &dyn Subroutines,
) -> Result<(TransversalSolution, CaseTrace)> {
    g.check_set(w)?;
    let p = ClassParam::new(s);
    p.check(g)?;
    let problem = Problem::transversal(target, true);
    let single = |label: &'static str, sol: TransversalSolution| {
        let trace = CaseTrace {
            problem,
            steps: vec![TraceStep {
                label,
                candidates: 1,
                best: Some(sol.vertices),
                provenance: None,
            }],
        };
        (sol, trace)
    };
    if s == 0 {
        let sol = match target {
            Target::Forest => cfvs_extension_p4free_with(g, w, provider)?,
            _ => coct_extension_p4free_with(g, w, provider)?,
        };
        return Ok(single("cograph", sol));
    }
    let Some(comp) = relevant_component(g, target, w)? else {
        return Ok(single("nothing to do", checked(g, problem, VertexSet::EMPTY, w)));
    };
    if w.is_empty() && g.satisfies_within(target, comp) {
        return Ok(single("nothing to do", checked(g, problem, VertexSet::EMPTY, w)));
    }
    let valid = |t: VertexSet| {
        w.is_subset(t) && t.is_subset(comp) && g.is_connected_within(t) && g.satisfies_within(target, comp - t)
    };
    let mut rec = Recorder::new(problem, comp, &valid);
    rec.begin("whole component");
    rec.offer(comp, &|| "all".into());
    let cx = Ctx { g, comp, w, p, target, provider };
    match target {
        Target::Forest => cx.cfvs(&mut rec),
        _ => cx.coct(&mut rec),
    }
    let (best, trace) = rec.finish();
    let best = best.expect("the whole component is always a solution");
    Ok((checked(g, problem, best, w), trace))
}

/// Smallest connected feedback vertex set containing `w` of an
/// (sP1+P3)-free graph. `Error::Infeasible` if none exists.
pub fn cfvs_extension_sp1p3(g: &Graph, w: VertexSet, s: usize) -> Result<TransversalSolution> {
    cfvs_extension_sp1p3_with(g, w, s, &ExactSubroutines)
}

pub fn cfvs_extension_sp1p3_with(
    g: &Graph,
    w: VertexSet,
    s: usize,
    provider: &dyn Subroutines,
) -> Result<TransversalSolution> {
    Ok(run(g, w, s, Target::Forest, provider)?.0)
}

pub fn cfvs_extension_sp1p3_traced(g: &Graph, w: VertexSet, s: usize) -> Result<(TransversalSolution, CaseTrace)> {
    run(g, w, s, Target::Forest, &ExactSubroutines)
}

/// Smallest connected odd cycle transversal containing `w` of an
/// (sP1+P3)-free graph. `Error::Infeasible` if none exists.
pub fn coct_extension_sp1p3(g: &Graph, w: VertexSet, s: usize) -> Result<TransversalSolution> {
    coct_extension_sp1p3_with(g, w, s, &ExactSubroutines)
}

pub fn coct_extension_sp1p3_with(
    g: &Graph,
    w: VertexSet,
    s: usize,
    provider: &dyn Subroutines,
) -> Result<TransversalSolution> {
    Ok(run(g, w, s, Target::Bipartite, provider)?.0)
}

pub fn coct_extension_sp1p3_traced(g: &Graph, w: VertexSet, s: usize) -> Result<(TransversalSolution, CaseTrace)> {
    run(g, w, s, Target::Bipartite, &ExactSubroutines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::from_slice(v)
    }

    #[test]
    fn small_examples() {
        assert_eq!(cfvs_extension_sp1p3(&cycle(4), VertexSet::EMPTY, 1).unwrap().objective(), 1);
        assert_eq!(cfvs_extension_sp1p3(&cycle(4), set(&[0, 2]), 1).unwrap().objective(), 3);
        assert_eq!(coct_extension_sp1p3(&cycle(5), VertexSet::EMPTY, 1).unwrap().objective(), 1);
        let sol = coct_extension_sp1p3(&complete(4), set(&[0]), 1).unwrap();
        assert_eq!(sol.objective(), 2);
        assert!(sol.vertices.contains(0));
    }

    #[test]
    fn infeasible_when_two_components_need_vertices() {
        let g = disjoint_union(&complete(3), &complete(3));
        assert!(cfvs_extension_sp1p3(&g, VertexSet::EMPTY, 2).unwrap_err().is_infeasible());
    }
}
