//! Randomized and exhaustive invariants, each checked against an
//! independent brute-force computation where one exists.

use proptest::prelude::*;
use tripack::bounds::{f_value, g_value, k_value, multipartite_g, QuarterInt};
use tripack::edgelist::{parse_edge_list, to_edge_list};
use tripack::explorer::{exhaustive_sweep, graph_from_index, Check, ExploreOptions};
use tripack::generators::{complete_multipartite, equality_family, turan2};
use tripack::graph::{full_mask, Graph};
use tripack::graph6::{parse_graph6, to_graph6};
use tripack::oracle::{enumerate_greedy_partitions, max_packing_exact, recount};
use tripack::packing::{extract_packing, is_edge_disjoint, residue_classes};
use tripack::partition::{build_greedy_partition, validate_greedy};
use tripack::symmetrize::{run_symm_alg_with, verify_trace, InitialCheck, SymmetrizationTrace};

fn graph_from_bits(n: usize, keep: impl Fn(usize, usize, usize) -> bool) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if keep(u, v, k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, |_, _, k| bits[k]))
    })
}

/// Subgraphs of complete 3-partite graphs, so K4-free by construction.
fn arb_k4_free(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(0..3usize, n),
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
        )
            .prop_map(move |(part, bits)| graph_from_bits(n, |u, v, k| part[u] != part[v] && bits[k]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn counts_match_naive_recount(g in arb_graph(14)) {
        prop_assert_eq!((g.edge_count(), g.triangle_count()), recount(&g));
        prop_assert_eq!(g.triangles().len(), g.triangle_count());
        let sum: usize = (0..g.n()).map(|v| g.triangles_at(v)).sum();
        prop_assert_eq!(sum, 3 * g.triangle_count());
    }

    #[test]
    fn built_partitions_are_greedy(g in arb_graph(12)) {
        let p = build_greedy_partition(&g);
        prop_assert_eq!(validate_greedy(&g, &p), Ok(true));
        if g.is_k4_free() {
            prop_assert!(p.cliques().iter().all(|c| c.len() <= 3));
        }
    }

    #[test]
    fn packing_bounds(g in arb_k4_free(10)) {
        let p = build_greedy_partition(&g);
        let pk = extract_packing(&g, &p).unwrap();
        prop_assert!(is_edge_disjoint(&pk.triangles));
        prop_assert!(pk.size >= g.triangle_count().div_ceil(p.r()));
        prop_assert!(pk.size as i64 >= k_value(&g).ceil());
        for class in residue_classes(&g, &p).unwrap() {
            prop_assert!(is_edge_disjoint(&class));
        }
        if let Ok(te) = max_packing_exact(&g) {
            prop_assert!(te >= pk.size);
        }
    }

    #[test]
    fn g_dominates_f_and_f_grows_with_r(g in arb_graph(12), r in 1usize..12) {
        prop_assert!(g_value(&g, r) >= f_value(&g, r));
        if k_value(&g) >= QuarterInt::ZERO {
            prop_assert!(f_value(&g, r + 1) >= f_value(&g, r));
        }
    }

    #[test]
    fn f_bound_holds_for_every_graph(g in arb_graph(12)) {
        let p = build_greedy_partition(&g);
        prop_assert!(f_value(&g, p.r()) <= QuarterInt::ZERO);
    }

    #[test]
    fn symmetrization_traces_verify(g in arb_graph(11), after in any::<bool>()) {
        let p = build_greedy_partition(&g);
        let mode = if after { InitialCheck::AfterFirstRound } else { InitialCheck::StopIfNegative };
        let tr = run_symm_alg_with(&g, &p, mode).unwrap();
        prop_assert!(tr.rounds.len() < p.r().max(1));
        let c = verify_trace(&tr, &g, &p).unwrap();
        prop_assert_eq!(c.initial_f4, f_value(&g, p.r()).quarters());
        prop_assert!(c.initial_f4 <= c.chain_f4 && c.chain_f4 <= 0);
        let back = SymmetrizationTrace::from_json(&tr.to_json()).unwrap();
        prop_assert_eq!(back, tr);
    }

    #[test]
    fn symmetrized_graphs_keep_clique_number(g in arb_k4_free(14)) {
        let p = build_greedy_partition(&g);
        let tr = run_symm_alg_with(&g, &p, InitialCheck::AfterFirstRound).unwrap();
        prop_assert!(tr.final_graph.is_k4_free());
    }

    #[test]
    fn serializations_round_trip(g in arb_graph(64)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g, &["x".into()])).unwrap(), g);
    }

    #[test]
    fn copies_share_the_source_neighborhood(
        base in arb_graph(10),
        ia in any::<prop::sample::Index>(),
        ib in any::<prop::sample::Index>(),
    ) {
        let n = base.n();
        prop_assume!(n >= 2);
        let a = ia.index(n);
        let b = (a + 1 + ib.index(n - 1)) % n;
        let pair = (a.min(b), a.max(b));
        let g = Graph::from_edges(n, base.edges().filter(|&e| e != pair)).unwrap();
        let h = g.replace_by_copy(a, b).unwrap();
        prop_assert_eq!(h.neighbors(a), g.neighbors(b));
        prop_assert_eq!(h.neighbors(b), g.neighbors(b));
        for v in 0..g.n() {
            if v != a && v != b {
                for w in 0..g.n() {
                    if w != a {
                        prop_assert_eq!(h.has_edge(v, w), g.has_edge(v, w));
                    }
                }
            }
        }
    }
}

fn brute_clique_number(g: &Graph) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&s| {
            let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            vs.iter().enumerate().all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[test]
fn clique_bounds_match_subset_search_up_to_six_vertices() {
    for n in 0..=6usize {
        for mask in 0..1u64 << (n * n.saturating_sub(1) / 2) {
            let g = graph_from_index(n, mask);
            let omega = brute_clique_number(&g);
            assert_eq!(g.clique_number(), omega);
            for m in 0..=4 {
                assert_eq!(g.clique_number_at_most(m), omega <= m, "n={n} mask={mask} m={m}");
            }
            assert_eq!(g.is_clique(full_mask(n)), omega == n);
        }
    }
}

fn size_vectors(max_sum: usize) -> Vec<Vec<usize>> {
    fn rec(min: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for c in min..=left {
            cur.push(c);
            rec(c, left - c, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, max_sum, &mut Vec::new(), &mut out);
    out
}

#[test]
fn multipartite_formulas_match_recount() {
    for sizes in size_vectors(9) {
        let g = complete_multipartite(&sizes).unwrap();
        let (e, t) = recount(&g);
        assert_eq!((g.edge_count(), g.triangle_count()), (e, t));
        let top = *sizes.last().unwrap();
        assert_eq!(g_value(&g, top).quarters(), 4 * multipartite_g(&sizes).unwrap());
        assert_eq!(tripack::symmetrize::multipartite_parts(&g), Some(sizes.clone()));
    }
}

#[test]
fn complete_multipartite_graphs_are_fixed_points() {
    for sizes in size_vectors(8) {
        let g = complete_multipartite(&sizes).unwrap();
        for p in enumerate_greedy_partitions(&g).unwrap() {
            let tr = run_symm_alg_with(&g, &p, InitialCheck::AfterFirstRound).unwrap();
            assert_eq!(tr.final_graph, g, "{sizes:?}");
            verify_trace(&tr, &g, &p).unwrap();
        }
    }
}

#[test]
fn equality_family_is_k4_free() {
    for m in 0..=5usize {
        for mask in 0..1u64 << (m * m.saturating_sub(1) / 2) {
            let inner = graph_from_index(m, mask);
            if inner.triangle_count() > 0 {
                continue;
            }
            for r in 1..=3 {
                let g = equality_family(r, &inner).unwrap();
                assert!(g.is_k4_free());
                assert_eq!(g.edge_count(), r * m + inner.edge_count());
            }
        }
    }
}

#[test]
fn turan_edge_counts() {
    for n in 1..=40 {
        assert_eq!(turan2(n).unwrap().edge_count(), n * n / 4);
    }
}

#[test]
fn oracle_dominates_extraction_and_k_up_to_six_vertices() {
    let opts = ExploreOptions { oracle_sample: 1, ..ExploreOptions::with_checks([Check::Theorem2, Check::Oracle]) };
    for n in 0..=6usize {
        let rep = exhaustive_sweep(n, &opts).unwrap();
        assert_eq!(rep.failures(Check::Oracle), 0);
        assert_eq!(rep.stats(Check::Oracle).unwrap().checked, rep.k4_free);
    }
}

#[test]
fn symmetrization_verifies_on_every_graph_with_seven_vertices() {
    let rep = exhaustive_sweep(7, &ExploreOptions::with_checks([Check::Symmalg])).unwrap();
    assert_eq!(rep.graphs, 1 << 21);
    assert_eq!(rep.failures(Check::Symmalg), 0, "{}", rep.to_json());
}
