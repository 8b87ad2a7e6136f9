//! The QASST updates agree with recomputing the decomposition from scratch.

use lcsplit::families;
use lcsplit::orbit::{are_lc_equivalent, Equivalence};
use lcsplit::qasst_ops::{
    extend, extend_graph, extend_traced, induced_qasst, lc_propagate, random_dh, replay,
    single_vertex_qasst, Extension, ExtensionKind,
};
use lcsplit::split::{compute_qasst, is_distance_hereditary, reconstruct};
use lcsplit::{Qasst, SimpleGraph};
use proptest::prelude::*;

fn dh_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, seed)| random_dh(n, seed).unwrap().0)
}

/// Connected graphs that may contain prime quotients.
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
            for v in 1..n {
                if !g.is_connected() {
                    g.add_edge(v, v + 1).unwrap();
                }
            }
            g
        })
    })
}

fn extension(n: usize) -> impl Strategy<Value = Extension> {
    (0..3usize, 1..=n).prop_map(|(k, anchor)| Extension {
        kind: [ExtensionKind::Pendant, ExtensionKind::FalseTwin, ExtensionKind::TrueTwin][k],
        anchor,
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, .. ProptestConfig::default() })]

    #[test]
    fn lc_propagate_matches_recomputation(g in connected_graph(11), pick in any::<prop::sample::Index>()) {
        let v = pick.index(g.n()) + 1;
        let q = compute_qasst(&g).unwrap();
        let updated = lc_propagate(&q, v).unwrap();
        prop_assert_eq!(&updated, &compute_qasst(&g.local_complement(v).unwrap()).unwrap());
        prop_assert_eq!(lc_propagate(&updated, v).unwrap(), q);
    }

    #[test]
    fn lc_propagate_on_dh_graphs(g in dh_graph(14), pick in any::<prop::sample::Index>()) {
        let v = pick.index(g.n()) + 1;
        let updated = lc_propagate(&compute_qasst(&g).unwrap(), v).unwrap();
        prop_assert_eq!(reconstruct(&updated).unwrap(), g.local_complement(v).unwrap());
    }

    #[test]
    fn induced_qasst_matches_recomputation(g in connected_graph(10), seed in any::<u64>()) {
        // grow a connected vertex set from a seed vertex
        let mut keep = vec![(seed as usize % g.n()) + 1];
        let target = (seed >> 8) as usize % g.n() + 1;
        while keep.len() < target {
            let next = (1..=g.n()).find(|v| !keep.contains(v) && keep.iter().any(|&u| g.has_edge(u, *v)));
            match next {
                Some(v) => keep.push(v),
                None => break,
            }
        }
        keep.sort_unstable();
        let direct = compute_qasst(&g.induced_subgraph(&keep).unwrap().graph).unwrap();
        prop_assert_eq!(induced_qasst(&compute_qasst(&g).unwrap(), &keep).unwrap(), direct);
    }

    #[test]
    fn extension_matches_recomputation(g in connected_graph(8), e in extension(8)) {
        let e = Extension { anchor: (e.anchor - 1) % g.n() + 1, ..e };
        let h = extend_graph(&g, e).unwrap();
        let q = extend(&compute_qasst(&g).unwrap(), e, g.n() + 1).unwrap();
        prop_assert_eq!(q, compute_qasst(&h).unwrap());
    }

    #[test]
    fn random_dh_replays_to_its_decomposition(n in 1usize..=20, seed in any::<u64>()) {
        let (g, trace) = random_dh(n, seed).unwrap();
        prop_assert!(is_distance_hereditary(&g).unwrap());
        prop_assert_eq!(trace.len(), n - 1);
        let q = replay(&trace).unwrap();
        prop_assert_eq!(reconstruct(&q).unwrap(), g.clone());
        prop_assert_eq!(q, compute_qasst(&g).unwrap());
        prop_assert_eq!(random_dh(n, seed).unwrap().0, g);
    }

    #[test]
    fn corresponding_quotients_are_lc_equivalent(g in connected_graph(10), steps in proptest::collection::vec(any::<prop::sample::Index>(), 1..6)) {
        let mut q = compute_qasst(&g).unwrap();
        let start = q.clone();
        for s in steps {
            q = lc_propagate(&q, s.index(g.n()) + 1).unwrap();
        }
        prop_assert_eq!(q.quotients().len(), start.quotients().len());
        for (a, b) in start.quotients().iter().zip(q.quotients()) {
            prop_assert_eq!(a.nodes(), b.nodes());
            prop_assert_eq!(
                are_lc_equivalent(a.graph(), b.graph(), 100_000),
                Equivalence::Equivalent
            );
        }
    }

    #[test]
    fn json_round_trip(g in connected_graph(12)) {
        let q = compute_qasst(&g).unwrap();
        prop_assert_eq!(Qasst::from_json(&q.to_json()).unwrap(), q);
        prop_assert_eq!(SimpleGraph::from_json(&g.to_json()).unwrap(), g);
    }
}

#[test]
fn extension_from_a_single_vertex() {
    let q = single_vertex_qasst();
    for kind in [ExtensionKind::Pendant, ExtensionKind::TrueTwin] {
        let e = Extension { kind, anchor: 1 };
        let (next, _) = extend_traced(&q, e, 2).unwrap();
        assert_eq!(reconstruct(&next).unwrap(), families::complete(2));
    }
}

#[test]
fn extension_position_must_be_next_label() {
    let q = compute_qasst(&families::path(3)).unwrap();
    let e = Extension { kind: ExtensionKind::Pendant, anchor: 1 };
    assert!(extend(&q, e, 7).is_err());
}

#[test]
fn prime_anchor_extensions() {
    // every extension of a five-cycle anchors in a prime quotient
    let c5 = families::cycle(5);
    let q = compute_qasst(&c5).unwrap();
    for kind in [ExtensionKind::Pendant, ExtensionKind::FalseTwin, ExtensionKind::TrueTwin] {
        for anchor in 1..=5 {
            let e = Extension { kind, anchor };
            let (next, case) = extend_traced(&q, e, 6).unwrap();
            assert_eq!(case.shape, lcsplit::qasst_ops::AnchorShape::Prime);
            assert_eq!(next, compute_qasst(&extend_graph(&c5, e).unwrap()).unwrap());
        }
    }
}
