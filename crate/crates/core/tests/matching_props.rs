mod common;

use common::{random_graph, rng, Bits};
use kekule_core::graph::odd_component_count;
use kekule_core::matching::{classify_edge, tutte_witness, EdgeClass};
use kekule_core::{has_perfect_matching, maximum_matching, Graph};
use proptest::prelude::*;

fn graph_strategy(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order, any::<u64>()).prop_map(|(n, seed)| random_graph(&mut rng(seed), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn maximum_matching_is_maximum(g in graph_strategy(8)) {
        let m = maximum_matching(&g);
        let b = Bits::of(&g);
        prop_assert_eq!(m.len(), b.max_matching_within(b.all()));
        let mut seen = vec![false; g.order()];
        for &(u, v) in m.edges() {
            prop_assert!(g.has_edge(u, v));
            prop_assert!(!seen[u] && !seen[v]);
            seen[u] = true;
            seen[v] = true;
        }
        prop_assert_eq!(m.covered().len(), 2 * m.len());
        prop_assert_eq!(m.is_perfect(), 2 * m.len() == g.order());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tutte_equivalence_to_order_ten(g in graph_strategy(10)) {
        prop_assert_eq!(has_perfect_matching(&g), Bits::of(&g).tutte_condition());
    }

    #[test]
    fn tutte_witness_violates_condition(g in graph_strategy(10)) {
        match tutte_witness(&g).unwrap() {
            None => prop_assert!(has_perfect_matching(&g)),
            Some(w) => {
                prop_assert!(!has_perfect_matching(&g));
                prop_assert_eq!(w.odd_count, odd_component_count(&g, &w.set));
                prop_assert!(w.odd_count > w.set.len());
                // no smaller set violates the condition
                let b = Bits::of(&g);
                for s in 0..=b.all() {
                    if (s.count_ones() as usize) < w.set.len() {
                        let odd = b.components(b.all() & !s).iter().filter(|c| c.count_ones() % 2 == 1).count();
                        prop_assert!(odd <= s.count_ones() as usize);
                    }
                }
            }
        }
    }

    #[test]
    fn edge_classes_match_matching_enumeration(g in graph_strategy(10)) {
        let pms = Bits::of(&g).all_pms();
        for e in g.edges() {
            let within = pms.iter().filter(|pm| pm.contains(&e)).count();
            let want = if pms.is_empty() {
                EdgeClass::NoPerfectMatching
            } else if within == pms.len() {
                EdgeClass::FixedDouble
            } else if within == 0 {
                EdgeClass::FixedSingle
            } else {
                EdgeClass::Free
            };
            prop_assert_eq!(classify_edge(&g, e).unwrap(), want);
        }
    }
}

#[test]
fn tutte_equivalence_exhaustive_to_order_six() {
    for n in 1..=6 {
        for g in common::labeled(n) {
            assert_eq!(has_perfect_matching(&g), Bits::of(&g).tutte_condition(), "{:?}", g.edges());
        }
    }
}
