//! Symmetry classes and the per-assignment formulas against realized graphs
//! and the orbit oracle.

use std::collections::HashSet;

use lcsplit::counting::{self, edge_count_from_assignment, max_degree_from_assignment};
use lcsplit::families::{self, OrbitTag};
use lcsplit::orbit::enumerate_orbit;
use lcsplit::split::compute_qasst;
use lcsplit::symmetry::{
    base_graph, case_qasst, classify_member, enumerate_cases, enumerate_members, realize,
    synthesize_transformation,
};
use lcsplit::{Count, SimpleGraph};
use proptest::prelude::*;

const TAGS: [OrbitTag; 2] = [OrbitTag::KPartite, OrbitTag::CliqueStar];

fn part_vectors(k: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| (2..=max).map(move |n| [v.clone(), vec![n]].concat()))
            .collect();
    }
    out
}

#[test]
fn class_multiplicities_sum_to_orbit_sizes() {
    for k in 3..=5 {
        for ns in part_vectors(k, 4) {
            for tag in TAGS {
                let total: u128 = enumerate_cases(tag, &ns).unwrap().iter().map(|c| c.1).sum();
                let formula: Count = counting::orbit_size(tag, &ns).unwrap();
                assert_eq!(total as Count, formula, "{tag} {ns:?}");
            }
        }
    }
}

#[test]
fn members_realize_exactly_the_orbit() {
    for ns in [vec![2, 2, 2], vec![2, 3, 2], vec![3, 2, 2, 2]] {
        for tag in TAGS {
            let o = enumerate_orbit(&base_graph(tag, &ns, 1).unwrap(), 100_000).unwrap();
            let members = enumerate_members(tag, &ns).unwrap();
            let realized: HashSet<SimpleGraph> =
                members.iter().map(|c| realize(c, &ns).unwrap()).collect();
            assert_eq!(realized.len(), members.len(), "realizations are distinct");
            assert_eq!(realized.len(), o.len());
            assert!(realized.iter().all(|g| o.contains(g)), "{tag} {ns:?}");
            for c in &members {
                let g = realize(c, &ns).unwrap();
                assert_eq!(&classify_member(&g, &ns).unwrap(), c);
                assert_eq!(compute_qasst(&g).unwrap(), case_qasst(c, &ns).unwrap());
            }
        }
    }
}

#[test]
fn assignment_formulas_match_realized_graphs() {
    for k in 3..=4 {
        for ns in part_vectors(k, 3) {
            for tag in TAGS {
                for c in enumerate_members(tag, &ns).unwrap() {
                    let g = realize(&c, &ns).unwrap();
                    let a = c.assignment(k);
                    assert_eq!(a.orbit().unwrap(), tag);
                    assert_eq!(a.case().unwrap(), c.case);
                    let e: Count = edge_count_from_assignment(&ns, &a).unwrap();
                    assert_eq!(e, g.edge_count() as Count, "{c}");
                    assert_eq!(max_degree_from_assignment(&ns, &a).unwrap(), g.max_degree(), "{c}");
                }
            }
        }
    }
}

#[test]
fn transformations_land_on_every_class() {
    for ns in part_vectors(3, 3).into_iter().chain(part_vectors(4, 3)) {
        for tag in TAGS {
            for c in enumerate_members(tag, &ns).unwrap() {
                for r in 1..=ns.len() {
                    let f = synthesize_transformation(&c, &ns, r).unwrap();
                    let g = base_graph(tag, &ns, r).unwrap().apply_sequence(&f).unwrap();
                    assert_eq!(g, realize(&c, &ns).unwrap(), "{c} from r={r}");
                }
            }
        }
    }
}

#[test]
fn bases_belong_to_their_tags() {
    let ns = [2, 2, 3];
    assert_eq!(
        classify_member(&families::complete_multipartite(&ns).unwrap(), &ns).unwrap().tag,
        OrbitTag::KPartite
    );
    assert_eq!(
        classify_member(&families::clique_star(&ns, 2).unwrap(), &ns).unwrap().tag,
        OrbitTag::CliqueStar
    );
}

fn parts() -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(2usize..=6, 3..=7)
}

proptest! {
    #[test]
    fn orbit_sizes_split_phi(ns in parts()) {
        let k: Count = counting::kpartite_orbit_size(&ns).unwrap();
        let cs: Count = counting::clique_star_orbit_size(&ns).unwrap();
        let phi: Count = counting::kpartite_phi(&ns).unwrap();
        prop_assert_eq!(k + cs, phi);
        prop_assert!(k > 0 && cs > 0);
    }

    #[test]
    fn phi_dp_matches_closed_form(ns in proptest::collection::vec(2usize..=4, 3..=5)) {
        let q = compute_qasst(&families::complete_multipartite(&ns).unwrap()).unwrap();
        let dp: Count = counting::phi_count(&q).unwrap();
        prop_assert_eq!(dp, counting::kpartite_phi::<Count>(&ns).unwrap());
        let bound: Count = counting::product_bound(&q).unwrap();
        prop_assert_eq!(bound, ns.iter().map(|&n| (n + 2) as Count).product::<Count>() * (ns.len() + 1) as Count);
    }

    #[test]
    fn orbit_sizes_are_permutation_invariant(ns in parts(), rot in 0usize..7) {
        let mut other = ns.clone();
        other.rotate_left(rot % ns.len());
        for tag in TAGS {
            prop_assert_eq!(
                counting::orbit_size::<Count>(tag, &ns).unwrap(),
                counting::orbit_size::<Count>(tag, &other).unwrap()
            );
            prop_assert_eq!(
                counting::min_edge_rep(tag, &ns).unwrap()[0].value,
                counting::min_edge_rep(tag, &other).unwrap()[0].value
            );
            prop_assert_eq!(
                counting::min_max_degree_rep(tag, &ns).unwrap()[0].value,
                counting::min_max_degree_rep(tag, &other).unwrap()[0].value
            );
        }
    }

    /// The table minimum equals the minimum over every class of the orbit.
    #[test]
    fn representatives_minimize_over_all_classes(ns in proptest::collection::vec(2usize..=6, 3..=6)) {
        for tag in TAGS {
            let classes = enumerate_cases(tag, &ns).unwrap();
            let k = ns.len();
            let min_e = classes
                .iter()
                .map(|(c, _)| edge_count_from_assignment::<Count>(&ns, &c.assignment(k)).unwrap())
                .min()
                .unwrap();
            let min_d = classes
                .iter()
                .map(|(c, _)| max_degree_from_assignment(&ns, &c.assignment(k)).unwrap())
                .min()
                .unwrap();
            let e = counting::min_edge_rep(tag, &ns).unwrap();
            let d = counting::min_max_degree_rep(tag, &ns).unwrap();
            for r in &e {
                prop_assert_eq!(r.value as Count, min_e);
                prop_assert_eq!(edge_count_from_assignment::<Count>(&ns, &r.assignment).unwrap(), min_e);
                prop_assert_eq!(r.assignment.orbit().unwrap(), tag);
            }
            for r in &d {
                prop_assert_eq!(r.value, min_d);
                prop_assert_eq!(max_degree_from_assignment(&ns, &r.assignment).unwrap(), min_d);
                prop_assert_eq!(r.assignment.orbit().unwrap(), tag);
            }
        }
    }
}
