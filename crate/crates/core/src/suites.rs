//! Verification suites: specialized solvers against the oracle, structural
//! lemma validators, the reduction equivalence, oracle self-consistency and
//! the connected vertex cover pipeline.
//!
//! Each suite counts checks and failures and keeps the first failing
//! instance. The command line `verify` subcommand and the acceptance tests
//! both run these.

use std::fmt;

use crate::cograph;
use crate::error::{Error, Result};
use crate::genio::{
    enumerate_all_graphs, labeled_trees, random_in_class, serialize_edgelist, unlabeled_trees, GeneratorSpec,
    GraphClass, SplitMix64,
};
use crate::graph::{Graph, Problem, Target};
use crate::oracle::{self, Engine, ExactSubroutines};
use crate::pattern::{is_cograph, is_hfree, LinearForestPattern};
use crate::reduction::{build_reduction, certify_class, coct_to_vc, vc_to_coct, VcInstance};
use crate::set::VertexSet;
use crate::sp1p3::{self, ClassParam};

/// A failing instance.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub graph: Graph,
    pub w: VertexSet,
    pub detail: String,
}

impl Counterexample {
    /// Edge list with the details and `w` as leading comment lines.
    pub fn to_text(&self) -> String {
        format!(
            "# {}\n# w: {}\n{}",
            self.detail.replace('\n', " "),
            self.w,
            serialize_edgelist(&self.graph)
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    pub first_failure: Option<Counterexample>,
}

impl SuiteReport {
    fn new(name: impl Into<String>) -> Self {
        SuiteReport {
            name: name.into(),
            checked: 0,
            failed: 0,
            first_failure: None,
        }
    }

    /// At least one check ran and none failed.
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }

    fn check(&mut self, ok: bool, g: &Graph, w: VertexSet, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(Counterexample {
                    graph: g.clone(),
                    w,
                    detail: detail(),
                });
            }
        }
    }

    /// Folds another report into this one.
    pub fn absorb(&mut self, other: SuiteReport) {
        self.checked += other.checked;
        self.failed += other.failed;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} checks, {} failed",
            self.name, self.checked, self.failed
        )?;
        if let Some(c) = &self.first_failure {
            write!(f, " (first: {})", c.detail)?;
        }
        Ok(())
    }
}

fn objective(r: Result<crate::solution::TransversalSolution>) -> std::result::Result<usize, String> {
    match r {
        Ok(sol) => Ok(sol.objective()),
        Err(Error::Infeasible(_)) => Err("infeasible".into()),
        Err(e) => Err(format!("error: {e}")),
    }
}

/// A uniformly random nonempty subset of `0..n` (`n ≥ 1`).
fn random_nonempty(rng: &mut SplitMix64, n: usize) -> VertexSet {
    loop {
        let bits = rng.next_u64() as u128 & VertexSet::full(n).bits();
        if bits != 0 {
            return VertexSet::from_bits(bits);
        }
    }
}

/// A random subset of `0..n` with at most `max` elements, possibly empty.
fn random_small(rng: &mut SplitMix64, n: usize, max: usize) -> VertexSet {
    let k = rng.below(max + 1);
    (0..k).map(|_| rng.below(n)).collect()
}

fn connected_ext(
    rep: &mut SuiteReport,
    g: &Graph,
    w: VertexSet,
    problem: Problem,
    got: Result<crate::solution::TransversalSolution>,
    label: &str,
) {
    if let Ok(sol) = &got {
        rep.check(sol.validate(g, w).is_ok(), g, w, || format!("{label} {problem}: invalid solution {}", sol.vertices));
    }
    let got = objective(got);
    let want = objective(oracle::min_extension(problem, g, w, true));
    rep.check(got == want, g, w, || format!("{label} {problem}: got {got:?}, oracle {want:?}"));
}

fn plain(rep: &mut SuiteReport, g: &Graph, problem: Problem, got: Result<crate::solution::TransversalSolution>, label: &str) {
    let want = match problem {
        Problem::Fvs => oracle::min_fvs(g).objective(),
        _ => oracle::min_oct(g).objective(),
    };
    let ok_valid = got.as_ref().map_or(true, |sol| sol.validate(g, VertexSet::EMPTY).is_ok());
    rep.check(ok_valid, g, VertexSet::EMPTY, || format!("{label} {problem}: invalid solution"));
    let got = objective(got);
    rep.check(got == Ok(want), g, VertexSet::EMPTY, || format!("{label} {problem}: got {got:?}, oracle {want}"));
}

/// Cograph solvers against the oracle on every connected labeled cograph
/// with at most `max_n` vertices, with `W = ∅` and `w_count` random
/// nonempty `W` per graph.
pub fn p4free_exhaustive(max_n: usize, w_count: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(format!("p4free-exhaustive-n{max_n}"));
    let mut rng = SplitMix64::new(seed);
    for n in 1..=max_n {
        for g in enumerate_all_graphs(n)? {
            if !g.is_connected() || !is_cograph(&g) {
                continue;
            }
            plain(&mut rep, &g, Problem::Fvs, cograph::min_fvs_cograph(&g), "cograph");
            plain(&mut rep, &g, Problem::Oct, cograph::min_oct_cograph(&g), "cograph");
            let ws = std::iter::once(VertexSet::EMPTY)
                .chain((0..w_count).map(|_| random_nonempty(&mut rng, n)))
                .collect::<Vec<_>>();
            for w in ws {
                connected_ext(&mut rep, &g, w, Problem::CfvsExt, cograph::cfvs_extension_p4free(&g, w), "cograph");
                connected_ext(&mut rep, &g, w, Problem::CoctExt, cograph::coct_extension_p4free(&g, w), "cograph");
            }
        }
    }
    Ok(rep)
}

fn sp1p3_all_four(rep: &mut SuiteReport, g: &Graph, s: usize, ws: &[VertexSet], coct: bool) {
    let label = format!("sp1p3 s={s}");
    plain(rep, g, Problem::Fvs, sp1p3::fvs_sp1p3(g, s), &label);
    plain(rep, g, Problem::Oct, sp1p3::oct_sp1p3(g, s), &label);
    for &w in ws {
        connected_ext(rep, g, w, Problem::CfvsExt, sp1p3::cfvs_extension_sp1p3(g, w, s), &label);
        if coct {
            connected_ext(rep, g, w, Problem::CoctExt, sp1p3::coct_extension_sp1p3(g, w, s), &label);
        }
    }
}

/// The four (sP1+P3)-free solvers against the oracle on every connected
/// labeled graph of the class with at most `max_n` vertices, with `W = ∅`
/// and one random nonempty `W` per graph.
pub fn sp1p3_exhaustive(s: usize, max_n: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(format!("sp1p3-exhaustive-s{s}-n{max_n}"));
    let mut rng = SplitMix64::new(seed);
    let p = ClassParam::new(s);
    for n in 1..=max_n {
        for g in enumerate_all_graphs(n)? {
            if !g.is_connected() || !p.contains(&g) {
                continue;
            }
            let ws = [VertexSet::EMPTY, random_nonempty(&mut rng, n)];
            sp1p3_all_four(&mut rep, &g, s, &ws, true);
        }
    }
    Ok(rep)
}

fn random_spec(rng: &mut SplitMix64, class: GraphClass, min_n: usize, max_n: usize) -> GeneratorSpec {
    let n = rng.range(min_n, max_n);
    let density = rng.next_f64();
    let connected = rng.chance(0.5);
    GeneratorSpec::new(class, n, rng.next_u64()).density(density).connected(connected)
}

/// `count` random graphs of the class with at most `max_n` vertices for the
/// first three solvers, and `count` more with at most `coct_max_n` vertices
/// for the connected odd cycle transversal.
pub fn sp1p3_random(s: usize, count: usize, max_n: usize, coct_max_n: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(format!("sp1p3-random-s{s}"));
    let mut rng = SplitMix64::new(seed);
    let label = format!("sp1p3 s={s}");
    for round in 0..2 {
        let top = if round == 0 { max_n } else { coct_max_n };
        for _ in 0..count {
            let g = random_in_class(&random_spec(&mut rng, GraphClass::Sp1P3Free(s), 1, top))?;
            let ws = [VertexSet::EMPTY, random_small(&mut rng, g.n(), 3)];
            if round == 0 {
                sp1p3_all_four(&mut rep, &g, s, &ws, false);
            } else {
                for w in ws {
                    connected_ext(&mut rep, &g, w, Problem::CoctExt, sp1p3::coct_extension_sp1p3(&g, w, s), &label);
                }
            }
        }
    }
    Ok(rep)
}

/// The spanning complete bipartite split on every connected labeled
/// cograph with 2 to `max_n` vertices and on `count` random ones with up
/// to `random_max_n` vertices.
pub fn lemma_split(max_n: usize, count: usize, random_max_n: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lemma-split");
    let check = |rep: &mut SuiteReport, g: &Graph| {
        let ok = match cograph::spanning_split(g) {
            Ok(split) => {
                split.is_valid(g)
                    && !split.x.is_empty()
                    && !split.y.is_empty()
                    && g.complement().components_within(g.vertices()).contains(&split.x)
            }
            Err(_) => false,
        };
        rep.check(ok, g, VertexSet::EMPTY, || "split invariant violated".into());
    };
    for n in 2..=max_n {
        for g in enumerate_all_graphs(n)? {
            if g.is_connected() && is_cograph(&g) {
                check(&mut rep, &g);
            }
        }
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..count {
        let n = rng.range(2, random_max_n);
        let g = random_in_class(&GeneratorSpec::new(GraphClass::Cograph, n, rng.next_u64()).connected(true))?;
        check(&mut rep, &g);
    }
    Ok(rep)
}

/// The component structure of bipartite (sP1+P3)-free graphs, for
/// `s ∈ s_values`, over all labeled graphs with at most `max_n` vertices.
pub fn lemma_components(s_values: &[usize], max_n: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(format!("lemma-components-n{max_n}"));
    for n in 1..=max_n {
        for g in enumerate_all_graphs(n)? {
            if !g.is_bipartite_within(g.vertices()) {
                continue;
            }
            for &s in s_values {
                if !ClassParam::new(s).contains(&g) {
                    continue;
                }
                let r = sp1p3::check_component_structure(&g, s);
                rep.check(matches!(r, Ok(true)), &g, VertexSet::EMPTY, || format!("s={s}: {r:?}"));
            }
        }
    }
    Ok(rep)
}

/// At most `4s` internal vertices in (sP1+P3)-free trees: every tree up to
/// isomorphism with at most `max_n` vertices, and every labeled tree (by
/// Prüfer sequence) with at most `labeled_max_n` vertices.
pub fn lemma_tree(s: usize, max_n: usize, labeled_max_n: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(format!("lemma-tree-s{s}"));
    let p = ClassParam::new(s);
    let check = |rep: &mut SuiteReport, t: &Graph| {
        if p.contains(t) {
            let r = sp1p3::internal_vertex_bound(t, s);
            rep.check(matches!(r, Ok(true)), t, VertexSet::EMPTY, || format!("s={s}: {r:?}"));
        }
    };
    for n in 1..=max_n {
        for t in unlabeled_trees(n) {
            check(&mut rep, &t);
        }
    }
    for n in 1..=labeled_max_n {
        for t in labeled_trees(n)? {
            check(&mut rep, &t);
        }
    }
    Ok(rep)
}

/// The connector size bound on `count` random connected (sP1+P3)-free
/// graphs with a random vertex subset each.
pub fn lemma_connector(s: usize, count: usize, max_n: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(format!("lemma-connector-s{s}"));
    let mut rng = SplitMix64::new(seed);
    let bound = ClassParam::new(s).connector_bound();
    for _ in 0..count {
        let n = rng.range(2, max_n);
        let density = rng.next_f64();
        let spec = GeneratorSpec::new(GraphClass::Sp1P3Free(s), n, rng.next_u64())
            .density(density)
            .connected(true);
        let g = random_in_class(&spec)?;
        let u = random_nonempty(&mut rng, n);
        let ok = match sp1p3::connector_set(&g, u, s) {
            Ok(r) => r.is_disjoint(u) && r.len() <= bound && g.is_connected_within(r | u),
            Err(_) => false,
        };
        rep.check(ok, &g, u, || format!("connector for {u} fails (bound {bound})"));
    }
    Ok(rep)
}

/// Contracting a random edge of a random connected H-free graph keeps it
/// connected and H-free, for several linear forests H.
pub fn lemma_contract(count: usize, max_n: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("lemma-contract");
    let mut rng = SplitMix64::new(seed);
    let classes = [
        GraphClass::Cograph,
        GraphClass::Sp1P3Free(1),
        GraphClass::Sp1P3Free(2),
        GraphClass::Sp1P5Free(0),
        GraphClass::Sp1P5Free(1),
        GraphClass::Sp1P5Free(2),
    ];
    for _ in 0..count {
        let class = classes[rng.below(classes.len())];
        let n = rng.range(2, max_n);
        let density = rng.next_f64();
        let spec = GeneratorSpec::new(class, n, rng.next_u64()).density(density).connected(true);
        let g = random_in_class(&spec)?;
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let (u, v) = edges[rng.below(edges.len())];
        let ok = match g.contract_edge(u, v) {
            Ok((h, _)) => h.is_connected() && class.contains(&h),
            Err(_) => false,
        };
        rep.check(ok, &g, VertexSet::from_slice(&[u, v]), || {
            format!("contracting {u}-{v} leaves the class {class}")
        });
    }
    Ok(rep)
}

/// The reduction on every graph with at most `max_n` vertices: the budget
/// equivalence for every `k`, both solution maps, the vertex count and the
/// class certificate; then the certificate on `count` random graphs with
/// `random_n` vertices. The subset engine double-checks the odd cycle
/// transversal optimum when `n ≤ subset_max_n`.
pub fn reduction(max_n: usize, subset_max_n: usize, count: usize, random_n: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(format!("reduction-n{max_n}"));
    let none = VertexSet::EMPTY;
    for n in 1..=max_n {
        for g in enumerate_all_graphs(n)? {
            let inst = build_reduction(&VcInstance::new(g.clone(), n)?);
            let gs = &inst.gstar;
            rep.check(gs.n() == 5 * n + g.m(), &g, none, || format!("|V(G*)| = {}", gs.n()));
            rep.check(certify_class(&inst), &g, none, || "G* contains P6 or P2+P5".into());
            let min_vc = oracle::min_vertex_cover(&g);
            let min_oct = oracle::min_oct(gs);
            if n <= subset_max_n {
                let by_subsets = oracle::min_transversal(gs, Target::Bipartite, Engine::Subsets);
                rep.check(by_subsets.objective() == min_oct.objective(), &g, none, || {
                    "oracle engines disagree on G*".into()
                });
            }
            for k in 0..=n {
                let left = min_vc.objective() <= k;
                let right = min_oct.objective() <= n + k;
                rep.check(left == right, &g, none, || {
                    format!("k={k}: minVC {} vs minOCT(G*) {}", min_vc.objective(), min_oct.objective())
                });
            }
            let mut q = min_vc.vertices;
            if q.is_empty() && n >= 2 {
                // The empty cover of an edgeless graph maps to a disconnected
                // transversal; any single vertex is also a cover.
                let s = vc_to_coct(&inst, q)?;
                let ok = s.len() == n && gs.validate_solution(Problem::Oct, s, none).is_ok();
                rep.check(ok, &g, q, || format!("witness {s} for the empty cover invalid"));
                q = VertexSet::singleton(0);
            }
            match vc_to_coct(&inst, q) {
                Ok(s) => {
                    let ok = s.len() == n + q.len() && gs.validate_solution(Problem::CoctExt, s, none).is_ok();
                    rep.check(ok, &g, q, || format!("witness {s} for cover {q} invalid"));
                    for t in [s, min_oct.vertices] {
                        let ok = match coct_to_vc(&inst, t) {
                            Ok(back) => {
                                back.len() + n <= t.len() && g.edges().all(|(a, b)| back.contains(a) || back.contains(b))
                            }
                            Err(_) => false,
                        };
                        rep.check(ok, &g, q, || format!("coct_to_vc({t}) is not a small cover"));
                    }
                }
                Err(e) => rep.check(false, &g, q, || format!("vc_to_coct failed: {e}")),
            }
        }
    }
    let mut rng = SplitMix64::new(seed);
    for _ in 0..count {
        let spec = GeneratorSpec::new(GraphClass::Any, random_n, rng.next_u64()).density(rng.next_f64());
        let g = random_in_class(&spec)?;
        let inst = build_reduction(&VcInstance::new(g.clone(), 0)?);
        rep.check(inst.gstar.n() == 5 * random_n + g.m(), &g, none, || "vertex count".into());
        rep.check(certify_class(&inst), &g, none, || "G* contains P6 or P2+P5".into());
    }
    Ok(rep)
}

/// Both oracle engines agree on FVS and OCT, `|VC| + |MIS| = n`, and the
/// one-vertex boost reproduces the independence number, on every labeled
/// graph with at most `max_n` vertices.
pub fn oracle_consistency(max_n: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(format!("oracle-consistency-n{max_n}"));
    let none = VertexSet::EMPTY;
    let inner = |g: &Graph, within: VertexSet| oracle::mis::max_independent_set_within(g, within);
    for n in 0..=max_n {
        for g in enumerate_all_graphs(n)? {
            for target in [Target::Forest, Target::Bipartite] {
                let a = oracle::min_transversal(&g, target, Engine::Subsets).objective();
                let b = oracle::min_transversal(&g, target, Engine::BranchAndBound).objective();
                rep.check(a == b, &g, none, || format!("{target:?}: subsets {a}, branch and bound {b}"));
            }
            let mis = oracle::max_independent_set(&g).objective();
            let vc = oracle::min_vertex_cover(&g).objective();
            rep.check(mis + vc == n, &g, none, || format!("MIS {mis} + VC {vc} != {n}"));
            let boost = oracle::mis_p1_boost(&g, &inner).objective();
            rep.check(boost == mis, &g, none, || format!("boost {boost} != MIS {mis}"));
        }
    }
    Ok(rep)
}

fn pipeline_check(rep: &mut SuiteReport, g: &Graph, w: VertexSet, s: usize) {
    let got = oracle::cvc_extension_pipeline_report(g, w, s, &ExactSubroutines);
    let fallback = got.as_ref().ok().and_then(|(_, r)| r.fallback_reason.clone());
    rep.check(fallback.is_none(), g, w, || format!("pipeline fell back: {}", fallback.clone().unwrap_or_default()));
    connected_ext(rep, g, w, Problem::CvcExt, got.map(|(sol, _)| sol), &format!("pipeline s={s}"));
}

/// The connected vertex cover pipeline against the oracle on every
/// connected labeled P5-free graph with at most `max_n` vertices, with
/// `W = ∅` and one random `W` per graph.
pub fn pipeline_exhaustive(max_n: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(format!("pipeline-exhaustive-n{max_n}"));
    let mut rng = SplitMix64::new(seed);
    let p5 = LinearForestPattern::path(5);
    for n in 1..=max_n {
        for g in enumerate_all_graphs(n)? {
            if !g.is_connected() || !is_hfree(&g, &p5) {
                continue;
            }
            let w = random_small(&mut rng, n, 2);
            for w in [VertexSet::EMPTY, w] {
                pipeline_check(&mut rep, &g, w, 0);
            }
        }
    }
    Ok(rep)
}

/// The pipeline on `count` random connected (sP1+P5)-free graphs.
pub fn pipeline_random(s: usize, count: usize, max_n: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new(format!("pipeline-random-s{s}"));
    let mut rng = SplitMix64::new(seed);
    for _ in 0..count {
        let n = rng.range(1, max_n);
        let density = rng.next_f64();
        let spec = GeneratorSpec::new(GraphClass::Sp1P5Free(s), n, rng.next_u64())
            .density(density)
            .connected(true);
        let g = random_in_class(&spec)?;
        let w = random_small(&mut rng, n, 2);
        pipeline_check(&mut rep, &g, w, s);
    }
    Ok(rep)
}

/// Parameters for [`run_suite`]; unset fields take the suite's default.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteParams {
    pub n: Option<usize>,
    pub s: Option<usize>,
    pub count: Option<usize>,
    pub seed: u64,
}

/// Suite names accepted by [`run_suite`]. A name may carry a `-n<k>` suffix
/// that sets `n`, e.g. `p4free-exhaustive-n7`.
pub const SUITE_NAMES: &[&str] = &[
    "p4free-exhaustive",
    "sp1p3-exhaustive",
    "sp1p3-random",
    "lemma-split",
    "lemma-components",
    "lemma-tree",
    "lemma-connector",
    "lemma-contract",
    "reduction",
    "oracle-consistency",
    "pipeline-exhaustive",
    "pipeline-random",
];

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<SuiteReport> {
    let mut p = params.clone();
    let mut base = name;
    if let Some((head, tail)) = name.rsplit_once("-n") {
        if let Ok(k) = tail.parse() {
            base = head;
            p.n = Some(k);
        }
    }
    let seed = p.seed;
    let s = p.s.unwrap_or(1);
    match base {
        "p4free-exhaustive" => p4free_exhaustive(p.n.unwrap_or(7), p.count.unwrap_or(30), seed),
        "sp1p3-exhaustive" => sp1p3_exhaustive(s, p.n.unwrap_or(6), seed),
        "sp1p3-random" => {
            let n = p.n.unwrap_or(11);
            sp1p3_random(s, p.count.unwrap_or(300), n, n.saturating_sub(1).max(1), seed)
        }
        "lemma-split" => lemma_split(p.n.unwrap_or(7), p.count.unwrap_or(200), 16, seed),
        "lemma-components" => lemma_components(&[0, 1, 2, 3], p.n.unwrap_or(7)),
        "lemma-tree" => lemma_tree(s, p.n.unwrap_or(12), 8),
        "lemma-connector" => lemma_connector(s, p.count.unwrap_or(500), p.n.unwrap_or(12), seed),
        "lemma-contract" => lemma_contract(p.count.unwrap_or(500), p.n.unwrap_or(12), seed),
        "reduction" => reduction(p.n.unwrap_or(4), 3, p.count.unwrap_or(50), 8, seed),
        "oracle-consistency" => oracle_consistency(p.n.unwrap_or(6)),
        "pipeline-exhaustive" => pipeline_exhaustive(p.n.unwrap_or(6), seed),
        "pipeline-random" => pipeline_random(s, p.count.unwrap_or(200), p.n.unwrap_or(12), seed),
        other => Err(Error::Precondition(format!(
            "unknown suite {other:?}; known: {}",
            SUITE_NAMES.join(", ")
        ))),
    }
}
