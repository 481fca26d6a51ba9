mod common;

use common::{connected_labeled, random_graph, rng, Bits};
use kekule_core::family::{
    admits_separation, every_cut_vertex_has_single_leaf, find_separation, verify_certificate, Certificate,
};
use kekule_core::graph::cut_vertices;
use kekule_core::{has_perfect_matching, pendant_replace, recognize, sample_member, Graph, Recognition, Witness};
use proptest::prelude::*;
use rand::Rng;

/// For separable graphs with a perfect matching, some cut vertex admits an
/// odd group of order at least 3, or every cut vertex splits off one leaf.
#[test]
fn separable_graphs_fall_in_one_of_two_cases() {
    let mut seen = [0usize; 2];
    for n in 2..=7 {
        for g in connected_labeled(n) {
            if cut_vertices(&g).is_empty() || !has_perfect_matching(&g) {
                continue;
            }
            let split = admits_separation(&g);
            let leaves = every_cut_vertex_has_single_leaf(&g);
            assert!(split || leaves, "third case: {:?}", g.edges());
            assert_eq!(find_separation(&g).is_some(), split, "{:?}", g.edges());
            seen[split as usize] += 1;
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0);
}

/// Members: every connected spanning subgraph has a perfect matching.
#[test]
fn connected_spanning_subgraphs_of_members_have_matchings() {
    let mut members = 0;
    for n in 1..=6 {
        for g in connected_labeled(n) {
            if !recognize(&g).unwrap().is_member() {
                continue;
            }
            members += 1;
            let edges = g.edges();
            let full = Bits::of(&g);
            for mask in 0u32..1 << edges.len() {
                let removed: Vec<_> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
                let h = full.without(&removed);
                if h.connected() {
                    assert!(h.has_pm(), "{:?} minus {removed:?}", g.edges());
                }
            }
        }
    }
    assert_eq!(members, 1 + 15 + 1260);
}

fn member_strategy() -> impl Strategy<Value = Graph> {
    (1..=7usize, any::<u64>()).prop_map(|(half, seed)| sample_member(half, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sampled_members_have_valid_certificates(g in member_strategy()) {
        let r = recognize(&g).unwrap();
        let c = r.certificate().expect("member");
        prop_assert_eq!(verify_certificate(&g, c), Ok(()));
        let json = serde_json::to_string(c).unwrap();
        let back: Certificate = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, c);
    }

    #[test]
    fn random_non_members_have_valid_witnesses(n in 2..=11usize, seed in any::<u64>()) {
        let mut r = rng(seed);
        let mut g = random_graph(&mut r, n);
        for v in 1..n {
            let u = r.gen_range(0..v);
            let _ = g.add_edge(u, v);
        }
        match recognize(&g).unwrap() {
            Recognition::Member(c) => prop_assert_eq!(verify_certificate(&g, &c), Ok(())),
            Recognition::NonMember(w) => {
                prop_assert!(common::is_bad_spanning_tree(&g, &w.tree));
                prop_assert!(w.verify(&g).is_ok());
                let json = serde_json::to_string(&w).unwrap();
                let back: Witness = serde_json::from_str(&json).unwrap();
                prop_assert_eq!(back, w);
            }
        }
    }

    #[test]
    fn certificates_do_not_transfer(g in member_strategy(), seed in any::<u64>()) {
        // adding any edge to a member certificate's graph breaks the certificate
        let c = recognize(&g).unwrap().certificate().cloned().unwrap();
        let non_edges: Vec<_> = (0..g.order())
            .flat_map(|u| (u + 1..g.order()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!non_edges.is_empty());
        let (u, v) = non_edges[rng(seed).gen_range(0..non_edges.len())];
        let mut h = g.clone();
        h.add_edge(u, v).unwrap();
        prop_assert!(verify_certificate(&h, &c).is_err());
    }

    #[test]
    fn pendant_replacement_keeps_membership(g in member_strategy(), f in member_strategy(), seed in any::<u64>()) {
        let pendants: Vec<usize> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
        prop_assume!(!pendants.is_empty());
        let mut r = rng(seed);
        let v = pendants[r.gen_range(0..pendants.len())];
        let w = r.gen_range(0..f.order());
        let h = pendant_replace(&g, v, &f, w).unwrap();
        prop_assert_eq!(h.order(), g.order() + f.order() - 2);
        prop_assert_eq!(h.size(), g.size() + f.size() - 1);
        prop_assert!(recognize(&h).unwrap().is_member());
    }
}
