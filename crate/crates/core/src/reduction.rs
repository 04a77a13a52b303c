//! Vertex Cover to (connected) Odd Cycle Transversal on (P2+P5, P6)-free
//! graphs.
//!
//! For a graph `G` on `n` vertices and `m` edges the output graph has
//! `5n + m` vertices numbered as follows, with `i` ranging over `0..n`:
//!
//! | ids            | role |
//! |----------------|------|
//! | `i`            | `a_i` |
//! | `n + i`        | `b_i` |
//! | `2n + i`       | `c_i` |
//! | `3n + i`       | `x_i` |
//! | `4n + i`       | `y_i` |
//! | `5n + e`       | `d_{i,j}` for the `e`-th edge `i < j` of `G` in lexicographic order |
//!
//! `Y` is complete to `X ∪ B`; each `i` adds the edges `x_i a_i`, `x_i b_i`,
//! `a_i b_i`, `b_i c_i`, `c_i y_i`; each edge `ij` adds `d_{i,j}` adjacent to
//! `x_i` and `y_j`. `G` has a vertex cover of size at most `k` exactly when
//! the output has an odd cycle transversal of size at most `n + k`, and then
//! also a connected one.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Problem, Target};
use crate::oracle::{self, Limits};
use crate::pattern::{is_hfree, LinearForestPattern};
use crate::set::VertexSet;

/// A Vertex Cover instance: is there a cover of size at most `k`?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VcInstance {
    pub g: Graph,
    pub k: usize,
}

impl VcInstance {
    pub fn new(g: Graph, k: usize) -> Result<Self> {
        if k > g.n() {
            return Err(Error::Precondition(format!("budget {k} exceeds n = {}", g.n())));
        }
        Ok(VcInstance { g, k })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    A,
    B,
    C,
    X,
    Y,
    D,
}

impl Role {
    pub fn tag(self) -> &'static str {
        match self {
            Role::A => "a",
            Role::B => "b",
            Role::C => "c",
            Role::X => "x",
            Role::Y => "y",
            Role::D => "d",
        }
    }
}

/// The role of one output vertex. `j` is set only for `D` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexRole {
    pub role: Role,
    pub i: usize,
    pub j: Option<usize>,
}

impl fmt::Display for VertexRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.j {
            Some(j) => write!(f, "{} {},{}", self.role.tag(), self.i, j),
            None => write!(f, "{} {}", self.role.tag(), self.i),
        }
    }
}

/// The output of [`build_reduction`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctInstance {
    pub gstar: Graph,
    pub roles: Vec<VertexRole>,
    /// `n + k`.
    pub budget: usize,
    pub origin: VcInstance,
}

impl OctInstance {
    fn n(&self) -> usize {
        self.origin.g.n()
    }

    pub fn a(&self, i: usize) -> usize {
        i
    }

    pub fn b(&self, i: usize) -> usize {
        self.n() + i
    }

    pub fn c(&self, i: usize) -> usize {
        2 * self.n() + i
    }

    pub fn x(&self, i: usize) -> usize {
        3 * self.n() + i
    }

    pub fn y(&self, i: usize) -> usize {
        4 * self.n() + i
    }

    pub fn role_set(&self, role: Role) -> VertexSet {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, r)| r.role == role)
            .map(|(v, _)| v)
            .collect()
    }

    /// The companion role file: one line `vertex role index` per vertex,
    /// the index being `i` or `i,j`.
    pub fn roles_text(&self) -> String {
        let mut out = String::new();
        for (v, r) in self.roles.iter().enumerate() {
            writeln!(out, "{v} {r}").expect("writing to a String");
        }
        out
    }
}

pub fn build_reduction(inst: &VcInstance) -> OctInstance {
    let g = &inst.g;
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let total = 5 * n + edges.len();
    let (a, b, c, x, y) = (0, n, 2 * n, 3 * n, 4 * n);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            out.push((x + i, y + j));
            out.push((b + i, y + j));
        }
        out.push((x + i, a + i));
        out.push((x + i, b + i));
        out.push((a + i, b + i));
        out.push((b + i, c + i));
        out.push((c + i, y + i));
    }
    for (e, &(i, j)) in edges.iter().enumerate() {
        out.push((5 * n + e, x + i));
        out.push((5 * n + e, y + j));
    }
    let gstar = Graph::from_edges(total, out).expect("reduction edges are simple and in range");
    let mut roles = Vec::with_capacity(total);
    for role in [Role::A, Role::B, Role::C, Role::X, Role::Y] {
        roles.extend((0..n).map(|i| VertexRole { role, i, j: None }));
    }
    roles.extend(edges.iter().map(|&(i, j)| VertexRole {
        role: Role::D,
        i,
        j: Some(j),
    }));
    OctInstance {
        gstar,
        roles,
        budget: n + inst.k,
        origin: inst.clone(),
    }
}

fn is_vertex_cover(g: &Graph, q: VertexSet) -> bool {
    g.edges().all(|(u, v)| q.contains(u) || q.contains(v))
}

/// `{x_i, y_i : i ∈ q} ∪ {b_i : i ∉ q}`, an odd cycle transversal of size
/// `n + |q|`. It is connected when `q` is nonempty or `n ≤ 1`; for an empty
/// `q` the `b_i` are pairwise nonadjacent.
pub fn vc_to_coct(inst: &OctInstance, q: VertexSet) -> Result<VertexSet> {
    let g = &inst.origin.g;
    g.check_set(q)?;
    if !is_vertex_cover(g, q) {
        return Err(Error::Precondition(format!("{q} is not a vertex cover")));
    }
    Ok((0..g.n())
        .flat_map(|i| {
            if q.contains(i) {
                vec![inst.x(i), inst.y(i)]
            } else {
                vec![inst.b(i)]
            }
        })
        .collect())
}

/// A vertex cover of size at most `|s| - n` from an odd cycle transversal
/// `s` of the output graph.
///
/// Every `d_{i,j}` in `s` is swapped for `x_i`; every gadget meeting `s` in
/// two or more vertices is replaced by `{x_i, y_i}`. What remains holds
/// either `b_i` or `{x_i, y_i}` per gadget, and the cover is the set of `i`
/// with `x_i` present.
pub fn coct_to_vc(inst: &OctInstance, s: VertexSet) -> Result<VertexSet> {
    inst.gstar
        .validate_solution(Problem::Oct, s, VertexSet::EMPTY)
        .map_err(|v| Error::Precondition(format!("not an odd cycle transversal: {v}")))?;
    let n = inst.n();
    let mut t = s;
    for (v, r) in inst.roles.iter().enumerate() {
        if r.role == Role::D && t.contains(v) {
            t.remove(v);
            t.insert(inst.x(r.i));
        }
    }
    for i in 0..n {
        let gadget = VertexSet::from_slice(&[inst.a(i), inst.b(i), inst.c(i), inst.x(i), inst.y(i)]);
        if (t & gadget).len() >= 2 {
            t -= gadget;
            t.insert(inst.x(i));
            t.insert(inst.y(i));
        }
    }
    debug_assert!(inst.gstar.remainder_satisfies(Target::Bipartite, t));
    let q: VertexSet = (0..n).filter(|&i| t.contains(inst.x(i))).collect();
    debug_assert!(q.len() + n <= s.len());
    Ok(q)
}

/// No induced P6 and no induced P2+P5.
pub fn certify_class(inst: &OctInstance) -> bool {
    let p6 = LinearForestPattern::path(6);
    let p2p5 = LinearForestPattern::new(vec![5, 2]).expect("valid pattern");
    is_hfree(&inst.gstar, &p6) && is_hfree(&inst.gstar, &p2p5)
}

/// Optima on both sides of the reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub min_vc: usize,
    pub min_oct: usize,
    /// A connected odd cycle transversal of size `n + min_vc`, or `n + 1`
    /// when `G` is edgeless with `n ≥ 2`.
    pub connected_witness: VertexSet,
    /// `min_oct = n + min_vc` and the witness is valid. Unless `G` is
    /// edgeless with `n ≥ 2`, the minimum connected odd cycle transversal
    /// then also equals `min_oct`.
    pub holds: bool,
}

/// Solves both sides exactly. `limits` bounds the branch and bound used on
/// the output graph; exhausting it gives `Error::SizeLimit`.
pub fn equivalence_check(inst: &OctInstance, limits: Limits) -> Result<EquivalenceReport> {
    let g = &inst.origin.g;
    let n = g.n();
    let cover = oracle::min_vertex_cover(g).vertices;
    let oct = oracle::bnb::min_cycle_transversal_limited(&inst.gstar, Target::Bipartite, inst.gstar.vertices(), limits)?;
    // An edgeless graph with n ≥ 2 has no connected witness of size n.
    let cover = if cover.is_empty() && n >= 2 { VertexSet::singleton(0) } else { cover };
    let witness = vc_to_coct(inst, cover)?;
    let witness_ok = inst
        .gstar
        .validate_solution(Problem::CoctExt, witness, VertexSet::EMPTY)
        .is_ok();
    Ok(EquivalenceReport {
        min_vc: oracle::min_vertex_cover(g).objective(),
        min_oct: oct.len(),
        connected_witness: witness,
        holds: witness_ok && witness.len() == n + cover.len() && oct.len() == n + oracle::min_vertex_cover(g).objective(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn inst(g: Graph) -> OctInstance {
        let k = g.n();
        build_reduction(&VcInstance::new(g, k).unwrap())
    }

    #[test]
    fn sizes() {
        assert_eq!(inst(complete(2)).gstar.n(), 11);
        assert_eq!(inst(complete(3)).gstar.n(), 18);
        let e = inst(Graph::empty(4).unwrap());
        assert_eq!(e.gstar.n(), 20);
        assert!(e.role_set(Role::D).is_empty());
        assert!(VcInstance::new(complete(2), 3).is_err());
    }

    #[test]
    fn structure() {
        let r = inst(path(4));
        let g = &r.gstar;
        let y = r.role_set(Role::Y);
        for v in r.role_set(Role::X) | r.role_set(Role::B) {
            assert!(y.is_subset(g.neighbors(v)));
        }
        let acd = r.role_set(Role::A) | r.role_set(Role::C) | r.role_set(Role::D);
        assert!(g.is_independent_set(acd));
        for v in acd {
            let nb = g.neighbors(v).to_vec();
            assert_eq!(nb.len(), 2);
            assert!(g.has_edge(nb[0], nb[1]));
        }
        assert!(r.roles_text().starts_with("0 a 0\n"));
        assert!(r.roles_text().ends_with("22 d 2,3\n"));
    }

    #[test]
    fn witnesses() {
        let r = inst(complete(2));
        let s = vc_to_coct(&r, VertexSet::singleton(0)).unwrap();
        assert_eq!(s, VertexSet::from_slice(&[r.x(0), r.y(0), r.b(1)]));
        assert!(r.gstar.validate_solution(Problem::CoctExt, s, VertexSet::EMPTY).is_ok());
        assert_eq!(coct_to_vc(&r, s).unwrap(), VertexSet::singleton(0));
        assert!(vc_to_coct(&r, VertexSet::EMPTY).is_err());

        let e = inst(Graph::empty(3).unwrap());
        let s = vc_to_coct(&e, VertexSet::EMPTY).unwrap();
        assert_eq!(s, VertexSet::from_slice(&[3, 4, 5]));
        assert!(e.gstar.validate_solution(Problem::Oct, s, VertexSet::EMPTY).is_ok());

        let k3 = inst(complete(3));
        let s = vc_to_coct(&k3, VertexSet::from_slice(&[0, 1])).unwrap();
        assert_eq!(s.len(), 5);
        assert!(k3.gstar.validate_solution(Problem::CoctExt, s, VertexSet::EMPTY).is_ok());

        let all = k3.role_set(Role::B) | k3.role_set(Role::X);
        assert_eq!(coct_to_vc(&k3, all).unwrap(), VertexSet::full(3));
    }

    #[test]
    fn class_certificate() {
        assert!(certify_class(&inst(complete(2))));
        assert!(certify_class(&inst(path(4))));
    }

    #[test]
    fn optima() {
        // Frozen from the branch-and-bound engine, cross-checked by subset
        // enumeration on the same output graphs.
        for (g, vc, oct) in [(complete(2), 1, 3), (complete(3), 2, 5), (path(3), 1, 4)] {
            let r = inst(g);
            let rep = equivalence_check(&r, Limits::default()).unwrap();
            assert_eq!((rep.min_vc, rep.min_oct), (vc, oct));
            assert!(rep.holds);
            let subsets = oracle::min_transversal(&r.gstar, Target::Bipartite, oracle::Engine::Subsets);
            assert_eq!(subsets.objective(), oct);
        }
    }
}
