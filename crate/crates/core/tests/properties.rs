//! Property tests over random small graphs.

use proptest::prelude::*;
use transversal_core::cograph::{self, build_cotree};
use transversal_core::genio::{
    parse_edgelist, parse_graph6, random_in_class, serialize_edgelist, serialize_graph6, GeneratorSpec, GraphClass,
};
use transversal_core::pattern::{find_induced, is_hfree};
use transversal_core::reduction::{build_reduction, certify_class, coct_to_vc, vc_to_coct, Role, VcInstance};
use transversal_core::{oracle, sp1p3, Graph, LinearForestPattern, Problem, VertexSet};

/// Any labeled graph on 1..=max_n vertices.
fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, bits)| {
        let mut edges = Vec::new();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bits >> (k % 64) & 1 == 1 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, edges).unwrap()
    })
}

fn in_class(class: GraphClass, min_n: usize, max_n: usize, connected: bool) -> impl Strategy<Value = Graph> {
    (min_n..=max_n, any::<u64>(), 0.0..=1.0f64).prop_map(move |(n, seed, p)| {
        random_in_class(&GeneratorSpec::new(class, n, seed).density(p).connected(connected)).unwrap()
    })
}

fn subset_of(g: &Graph, bits: u64) -> VertexSet {
    VertexSet::from_bits(bits as u128 & g.vertices().bits())
}

/// Independent check: `G[s]` is a disjoint union of paths whose orders match
/// the pattern.
fn is_copy_naive(g: &Graph, s: VertexSet, pattern: &LinearForestPattern) -> bool {
    let mut orders = Vec::new();
    for comp in g.components_within(s) {
        let degrees_ok = comp.iter().all(|v| (g.neighbors(v) & comp).len() <= 2);
        if !degrees_ok || g.edges_within(comp) + 1 != comp.len() {
            return false;
        }
        orders.push(comp.len());
    }
    orders.sort_unstable();
    let mut want = pattern.paths().to_vec();
    want.sort_unstable();
    orders == want
}

fn hfree_naive(g: &Graph, pattern: &LinearForestPattern) -> bool {
    let n = g.n();
    (0u64..1 << n).all(|bits| {
        let s = VertexSet::from_bits(bits as u128);
        s.len() != pattern.order() || !is_copy_naive(g, s, pattern)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in any_graph(12)) {
        let h = g.complement();
        prop_assert_eq!(h.m() + g.m(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(h.complement(), g);
    }

    #[test]
    fn formats_round_trip(g in any_graph(12)) {
        prop_assert_eq!(&parse_edgelist(&serialize_edgelist(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_graph6(&serialize_graph6(&g)).unwrap(), &g);
    }

    #[test]
    fn pattern_search_matches_brute_force(g in any_graph(7), which in 0usize..6) {
        let pattern: LinearForestPattern = ["P3", "P4", "P1+P3", "2P2", "P2+P3", "2P1+P3"][which].parse().unwrap();
        let fast = find_induced(&g, &pattern);
        prop_assert_eq!(fast.is_none(), hfree_naive(&g, &pattern));
        if let Some(copy) = fast {
            prop_assert!(copy.is_valid(&g, &pattern));
            prop_assert!(is_copy_naive(&g, copy.vertex_set(), &pattern));
        }
    }

    #[test]
    fn contraction_stays_in_class(g in in_class(GraphClass::Sp1P3Free(1), 2, 10, true), pick in any::<usize>()) {
        let edges: Vec<_> = g.edges().collect();
        let (u, v) = edges[pick % edges.len()];
        let (h, map) = g.contract_edge(u, v).unwrap();
        prop_assert_eq!(h.n(), g.n() - 1);
        prop_assert_eq!(map.len(), g.n());
        prop_assert_eq!(map[u], map[v]);
        prop_assert!(h.is_connected());
        prop_assert!(is_hfree(&h, &LinearForestPattern::sp1_p3(1)));
    }

    #[test]
    fn cotree_round_trip(g in in_class(GraphClass::Cograph, 1, 16, false)) {
        let t = build_cotree(&g).unwrap();
        prop_assert!(t.is_canonical());
        prop_assert_eq!(t.leaves(), g.vertices());
        prop_assert_eq!(t.to_graph(g.n()).unwrap(), g);
    }

    #[test]
    fn cotree_dp_matches_oracle(g in in_class(GraphClass::Cograph, 1, 11, false)) {
        prop_assert_eq!(cograph::min_fvs_cograph(&g).unwrap().objective(), oracle::min_fvs(&g).objective());
        prop_assert_eq!(cograph::min_oct_cograph(&g).unwrap().objective(), oracle::min_oct(&g).objective());
        prop_assert_eq!(
            cograph::max_independent_set_cotree(&g).unwrap().objective(),
            oracle::max_independent_set(&g).objective()
        );
    }

    #[test]
    fn traces_end_at_the_result(g in in_class(GraphClass::Sp1P3Free(1), 1, 9, false), bits in any::<u64>()) {
        let (sol, trace) = sp1p3::fvs_sp1p3_traced(&g, 1).unwrap();
        prop_assert_eq!(trace.optimum(), Some(sol.vertices));
        let (sol, trace) = sp1p3::oct_sp1p3_traced(&g, 1).unwrap();
        prop_assert_eq!(trace.optimum(), Some(sol.vertices));
        let w = subset_of(&g, bits) & VertexSet::from_bits(bits as u128 >> 20);
        if let Ok((sol, trace)) = sp1p3::cfvs_extension_sp1p3_traced(&g, w, 1) {
            prop_assert_eq!(trace.optimum(), Some(sol.vertices));
            prop_assert!(trace.candidates() >= 1);
            prop_assert!(w.is_subset(sol.vertices));
        }
    }

    #[test]
    fn zero_parameter_matches_cograph_solvers(g in in_class(GraphClass::Sp1P3Free(0), 1, 10, false), bits in any::<u64>()) {
        let w = subset_of(&g, bits) & VertexSet::from_bits(bits as u128 >> 17);
        let a = sp1p3::cfvs_extension_sp1p3(&g, w, 0).map(|s| s.vertices).ok();
        let b = cograph::cfvs_extension_p4free(&g, w).map(|s| s.vertices).ok();
        prop_assert_eq!(a, b);
        let a = sp1p3::coct_extension_sp1p3(&g, w, 0).map(|s| s.vertices).ok();
        let b = cograph::coct_extension_p4free(&g, w).map(|s| s.vertices).ok();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn reduction_invariants(g in any_graph(6)) {
        let n = g.n();
        let inst = build_reduction(&VcInstance::new(g.clone(), n).unwrap());
        prop_assert_eq!(inst.gstar.n(), 5 * n + g.m());
        prop_assert_eq!(inst.role_set(Role::D).len(), g.m());
        prop_assert!(certify_class(&inst));
        let q = oracle::min_vertex_cover(&g).vertices;
        let s = vc_to_coct(&inst, q).unwrap();
        prop_assert_eq!(s.len(), n + q.len());
        prop_assert!(inst.gstar.validate_solution(Problem::Oct, s, VertexSet::EMPTY).is_ok());
        let back = coct_to_vc(&inst, s).unwrap();
        prop_assert_eq!(back, q);
    }
}
