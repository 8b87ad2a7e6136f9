use std::collections::BTreeSet;

use lcsplit::families;
use lcsplit::graph::SimpleGraph;
use lcsplit::split::{
    classify_quotient, compute_qasst, dh_definition_oracle, is_distance_hereditary, is_split,
    join_validity, reconstruct, JoinValidity, QuotientKind, Split,
};
use proptest::prelude::*;

/// Graph on `n` vertices whose edges are the set bits of `mask` over the
/// upper triangle in lexicographic order.
fn graph_from_mask(n: usize, mask: u64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    let mut bit = 0;
    for u in 1..=n {
        for v in u + 1..=n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            bit += 1;
        }
    }
    g
}

/// Nontrivial strong splits by definition: enumerate every bipartition,
/// keep the splits, drop those crossed by another split.
fn brute_strong_splits(g: &SimpleGraph) -> BTreeSet<Split> {
    let n = g.n();
    let mut splits = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        // vertex 1 always on side A
        let side: Vec<usize> = std::iter::once(1)
            .chain((2..=n).filter(|v| mask >> (v - 2) & 1 == 1))
            .collect();
        if side.len() < 2 || side.len() > n - 2 {
            continue;
        }
        let s = Split::from_side(n, &side).unwrap();
        if is_split(g, &s).unwrap() {
            splits.push(s);
        }
    }
    let crosses = |a: &Split, b: &Split| {
        let sa: BTreeSet<_> = a.side_a.iter().collect();
        let sb: BTreeSet<_> = b.side_a.iter().collect();
        let inter = sa.intersection(&sb).count();
        inter > 0 && inter < sa.len() && inter < sb.len() && sa.len() + sb.len() - inter < n
    };
    splits
        .iter()
        .filter(|s| !splits.iter().any(|t| crosses(s, t)))
        .cloned()
        .collect()
}

fn check_decomposition(g: &SimpleGraph) {
    let q = compute_qasst(g).unwrap();
    assert_eq!(&reconstruct(&q).unwrap(), g, "round trip");
    let ours: BTreeSet<Split> = q.strong_splits().into_iter().collect();
    assert_eq!(ours, brute_strong_splits(g), "strong splits of {g:?}");
    for (s, t) in q.tree_edges() {
        let (a, b) = (q.kind_at(*s).unwrap(), q.kind_at(*t).unwrap());
        assert_eq!(join_validity(&a, &b), JoinValidity::Valid, "{g:?}");
    }
    for quotient in q.quotients() {
        if quotient.len() >= 4 {
            let kind = classify_quotient(quotient, None).unwrap();
            if kind == QuotientKind::Prime {
                assert!(!quotient.graph().edges().is_empty());
            }
        }
    }
}

#[test]
fn decomposition_matches_definition_up_to_six_vertices() {
    for n in 1..=6 {
        let pairs = n * (n - 1) / 2;
        for mask in 0..(1u64 << pairs) {
            let g = graph_from_mask(n, mask);
            if g.is_connected() {
                check_decomposition(&g);
            }
        }
    }
}

#[test]
fn distance_hereditary_agrees_with_definition_up_to_six_vertices() {
    for n in 1..=6 {
        let pairs = n * (n - 1) / 2;
        for mask in 0..(1u64 << pairs) {
            let g = graph_from_mask(n, mask);
            if g.is_connected() {
                assert_eq!(
                    is_distance_hereditary(&g).unwrap(),
                    dh_definition_oracle(&g).unwrap(),
                    "{g:?}"
                );
            }
        }
    }
}

/// The full seven-vertex sweep (about two million labeled graphs) takes
/// minutes; run it with `cargo test -- --ignored`.
#[test]
#[ignore]
fn distance_hereditary_agrees_with_definition_on_seven_vertices() {
    for mask in 0..(1u64 << 21) {
        let g = graph_from_mask(7, mask);
        if g.is_connected() {
            assert_eq!(
                is_distance_hereditary(&g).unwrap(),
                dh_definition_oracle(&g).unwrap(),
                "{g:?}"
            );
            assert_eq!(reconstruct(&compute_qasst(&g).unwrap()).unwrap(), g);
        }
    }
}

#[test]
fn families_are_distance_hereditary_except_long_cycles() {
    let gs = vec![
        families::complete(6),
        families::star(5),
        families::path(7),
        families::cycle(4),
        families::complete_bipartite(3, 4),
        families::complete_multipartite(&[2, 3, 2]).unwrap(),
        families::clique_star(&[2, 3, 2], 2).unwrap(),
        families::repeater(4),
        families::multi_leaf_repeater(&[3, 2, 4]).unwrap(),
    ];
    for g in gs {
        assert!(is_distance_hereditary(&g).unwrap(), "{g:?}");
    }
    for n in 5..=9 {
        assert!(!is_distance_hereditary(&families::cycle(n)).unwrap());
    }
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            // chain consecutive vertices so the graph is connected
            for v in 1..n {
                if !g.is_connected() {
                    g.add_edge(v, v + 1).unwrap();
                }
            }
            g
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, .. ProptestConfig::default() })]

    #[test]
    fn round_trip_random_graphs(g in connected_graph(12)) {
        let q = compute_qasst(&g).unwrap();
        prop_assert_eq!(reconstruct(&q).unwrap(), g);
    }

    #[test]
    fn strong_splits_random_graphs(g in connected_graph(9)) {
        check_decomposition(&g);
    }

    #[test]
    fn splits_are_lc_invariant(g in connected_graph(11), steps in proptest::collection::vec(1usize..=11, 1..6)) {
        let q = compute_qasst(&g).unwrap();
        let mut h = g.clone();
        for v in steps {
            h = h.local_complement((v - 1) % g.n() + 1).unwrap();
        }
        let r = compute_qasst(&h).unwrap();
        prop_assert_eq!(q.strong_splits(), r.strong_splits());
        prop_assert_eq!(
            is_distance_hereditary(&g).unwrap(),
            is_distance_hereditary(&h).unwrap()
        );
        let leaves = |x: &lcsplit::Qasst| x.quotients().iter().map(|qq| qq.leaf_nodes()).collect::<Vec<_>>();
        prop_assert_eq!(leaves(&q), leaves(&r));
    }
}
