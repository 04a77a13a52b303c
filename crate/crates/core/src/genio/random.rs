//! Seeded generators for the graph classes used in testing.
//!
//! The generator is SplitMix64 (Steele, Lea and Flood), chosen because it is
//! a few lines in any language, so fixtures can be reproduced elsewhere:
//!
//! ```text
//! state += 0x9E3779B97F4A7C15
//! z = state
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! return z ^ (z >> 31)
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::{find_induced, LinearForestPattern};
use crate::set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in `0..bound` (multiply-high reduction); `bound > 0`.
    pub fn below(&mut self, bound: usize) -> usize {
        assert!(bound > 0);
        ((self.next_u64() as u128 * bound as u128) >> 64) as usize
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below(hi - lo + 1)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }

    /// Fisher–Yates, from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }

    /// A uniformly random element of a nonempty set.
    pub fn pick(&mut self, set: VertexSet) -> usize {
        let k = self.below(set.len());
        set.iter().nth(k).expect("index below length")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Any,
    Cograph,
    /// (sP1+P3)-free.
    Sp1P3Free(usize),
    /// (sP1+P5)-free.
    Sp1P5Free(usize),
    Bipartite,
}

impl GraphClass {
    /// The forbidden pattern, for the classes defined by one.
    pub fn pattern(self) -> Option<LinearForestPattern> {
        match self {
            GraphClass::Cograph => Some(LinearForestPattern::path(4)),
            GraphClass::Sp1P3Free(s) => Some(LinearForestPattern::sp1_p3(s)),
            GraphClass::Sp1P5Free(s) => Some(LinearForestPattern::sp1_p5(s)),
            GraphClass::Any | GraphClass::Bipartite => None,
        }
    }

    pub fn contains(self, g: &Graph) -> bool {
        match self {
            GraphClass::Any => true,
            GraphClass::Bipartite => g.is_bipartite_within(g.vertices()),
            _ => find_induced(g, &self.pattern().expect("pattern class")).is_none(),
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphClass::Any => write!(f, "any"),
            GraphClass::Cograph => write!(f, "cograph"),
            GraphClass::Sp1P3Free(s) => write!(f, "sp1p3:{s}"),
            GraphClass::Sp1P5Free(s) => write!(f, "sp1p5:{s}"),
            GraphClass::Bipartite => write!(f, "bipartite"),
        }
    }
}

/// Accepts `any`, `cograph` (or `p4free`), `bipartite`, `sp1p3:<s>` and
/// `sp1p5:<s>`.
impl FromStr for GraphClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let param = |rest: &str| {
            rest.parse::<usize>()
                .map_err(|_| Error::parse(1, format!("bad class parameter in {s:?}")))
        };
        match s {
            "any" => Ok(GraphClass::Any),
            "cograph" | "p4free" => Ok(GraphClass::Cograph),
            "bipartite" => Ok(GraphClass::Bipartite),
            _ => {
                if let Some(rest) = s.strip_prefix("sp1p3:") {
                    Ok(GraphClass::Sp1P3Free(param(rest)?))
                } else if let Some(rest) = s.strip_prefix("sp1p5:") {
                    Ok(GraphClass::Sp1P5Free(param(rest)?))
                } else {
                    Err(Error::parse(1, format!("unknown graph class {s:?}")))
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub class: GraphClass,
    pub n: usize,
    /// Edge probability of the initial random graph; ignored for cographs.
    pub density: f64,
    pub seed: u64,
    pub connected: bool,
}

impl GeneratorSpec {
    pub fn new(class: GraphClass, n: usize, seed: u64) -> Self {
        GeneratorSpec {
            class,
            n,
            density: 0.5,
            seed,
            connected: false,
        }
    }

    pub fn density(mut self, p: f64) -> Self {
        self.density = p;
        self
    }

    pub fn connected(mut self, yes: bool) -> Self {
        self.connected = yes;
        self
    }
}

/// Attempts allowed before giving up on a spec.
const ATTEMPTS: usize = 64;

/// A random graph from the class, certified before it is returned.
///
/// Cographs come from random cotrees. Bipartite graphs are random subgraphs
/// of a random complete bipartite graph. For the pattern-defined classes a
/// random graph is repaired: while an induced copy of the pattern exists,
/// one of its non-edges is added or, early on, one of its edges removed.
/// Adding edges only ends at a complete graph at worst, so the repair
/// terminates; with `connected` set the start graph contains a random
/// spanning tree and edge removals keep it connected.
pub fn random_in_class(spec: &GeneratorSpec) -> Result<Graph> {
    if spec.n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n: spec.n, max: MAX_VERTICES });
    }
    if !(0.0..=1.0).contains(&spec.density) {
        return Err(Error::Precondition(format!("density {} outside [0, 1]", spec.density)));
    }
    let mut rng = SplitMix64::new(spec.seed);
    let mut rejected = 0;
    for _ in 0..ATTEMPTS {
        let g = match spec.class {
            GraphClass::Cograph => random_cograph(&mut rng, spec.n, spec.connected),
            GraphClass::Any => random_graph(&mut rng, spec.n, spec.density, spec.connected),
            GraphClass::Bipartite => random_bipartite(&mut rng, spec.n, spec.density, spec.connected),
            GraphClass::Sp1P3Free(_) | GraphClass::Sp1P5Free(_) => {
                let pattern = spec.class.pattern().expect("pattern class");
                let start = random_graph(&mut rng, spec.n, spec.density, spec.connected);
                repair(&mut rng, start, &pattern, spec.connected)
            }
        };
        if spec.class.contains(&g) && (!spec.connected || g.is_connected()) {
            return Ok(g);
        }
        rejected += 1;
    }
    Err(Error::SizeLimit(format!(
        "no certified {} graph on {} vertices after {rejected} attempts (acceptance rate 0/{rejected})",
        spec.class, spec.n
    )))
}

fn random_graph(rng: &mut SplitMix64, n: usize, p: f64, connected: bool) -> Graph {
    let mut edges = Vec::new();
    if connected && n > 1 {
        let mut order: Vec<usize> = (0..n).collect();
        rng.shuffle(&mut order);
        for i in 1..n {
            edges.push((order[rng.below(i)], order[i]));
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid ids")
}

fn random_bipartite(rng: &mut SplitMix64, n: usize, p: f64, connected: bool) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.chance(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    if connected && n > 1 {
        // Link components through a vertex of the opposite side, flipping a
        // side when one part is empty.
        let mut g = Graph::from_edges(n, edges.clone()).expect("valid ids");
        let mut side = side;
        loop {
            let comps = g.connected_components();
            if comps.len() == 1 {
                return g;
            }
            let a = comps[0].first().expect("nonempty");
            let b = comps[1].iter().find(|&b| side[b] != side[a]);
            let b = match b {
                Some(b) => b,
                None => {
                    for v in comps[1] {
                        side[v] = !side[v];
                    }
                    comps[1].first().expect("nonempty")
                }
            };
            edges.push((a, b));
            g = Graph::from_edges(n, edges.clone()).expect("valid ids");
        }
    }
    Graph::from_edges(n, edges).expect("valid ids")
}

/// Random cotree with alternating labels; leaves are a random permutation
/// of the vertices.
fn random_cograph(rng: &mut SplitMix64, n: usize, connected: bool) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    let mut adj = vec![VertexSet::EMPTY; n];
    let join_root = connected || rng.chance(0.5);
    build_cotree(rng, &order, join_root, &mut adj);
    Graph::from_adjacency(adj)
}

fn build_cotree(rng: &mut SplitMix64, leaves: &[usize], join: bool, adj: &mut [VertexSet]) {
    if leaves.len() <= 1 {
        return;
    }
    // Random composition of the leaves into 2..=4 nonempty blocks.
    let parts = rng.range(2, leaves.len().min(4));
    let mut cuts: Vec<usize> = (1..leaves.len()).collect();
    rng.shuffle(&mut cuts);
    let mut cuts: Vec<usize> = cuts[..parts - 1].to_vec();
    cuts.sort_unstable();
    cuts.insert(0, 0);
    cuts.push(leaves.len());
    let blocks: Vec<&[usize]> = cuts.windows(2).map(|w| &leaves[w[0]..w[1]]).collect();
    if join {
        for (i, a) in blocks.iter().enumerate() {
            for b in &blocks[i + 1..] {
                for &u in *a {
                    for &v in *b {
                        adj[u].insert(v);
                        adj[v].insert(u);
                    }
                }
            }
        }
    }
    for block in blocks {
        build_cotree(rng, block, !join, adj);
    }
}

/// Destroys induced copies of `pattern` one at a time.
fn repair(rng: &mut SplitMix64, g: Graph, pattern: &LinearForestPattern, connected: bool) -> Graph {
    let n = g.n();
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v)).collect();
    let removal_phase = 4 * n * n;
    let mut step = 0;
    loop {
        let current = Graph::from_adjacency(adj.clone());
        let Some(copy) = find_induced(&current, pattern) else {
            return current;
        };
        let verts = copy.vertices();
        let mut non_edges = Vec::new();
        let mut edges = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if current.has_edge(u, v) {
                    edges.push((u, v));
                } else {
                    non_edges.push((u, v));
                }
            }
        }
        let removable: Vec<(usize, usize)> = if step < removal_phase {
            edges
                .into_iter()
                .filter(|&(u, v)| {
                    if !connected {
                        return true;
                    }
                    let mut a = adj.clone();
                    a[u].remove(v);
                    a[v].remove(u);
                    Graph::from_adjacency(a).is_connected()
                })
                .collect()
        } else {
            Vec::new()
        };
        step += 1;
        if !removable.is_empty() && rng.chance(0.5) {
            let (u, v) = removable[rng.below(removable.len())];
            adj[u].remove(v);
            adj[v].remove(u);
        } else {
            let (u, v) = non_edges[rng.below(non_edges.len())];
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
}
