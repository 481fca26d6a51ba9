//! Fixed inputs shared by the benchmarks.

use kekule_core::graph::{complete, corona, cycle, petersen};
use kekule_core::{sample_member, Graph};

/// Members of increasing order, from the seeded sampler.
pub fn members(halves: &[usize]) -> Vec<(usize, Graph)> {
    halves
        .iter()
        .map(|&h| (2 * h, sample_member(h, 0xbe7c).expect("half order >= 1")))
        .collect()
}

/// Named graphs covering each recognition step.
pub fn named() -> Vec<(&'static str, Graph)> {
    vec![
        ("c20", cycle(20).unwrap()),
        ("k8_corona", corona(&complete(8).unwrap())),
        ("k10", complete(10).unwrap()),
        ("petersen", petersen()),
    ]
}

/// Corona of a long cycle with one chord added: a non-member found late.
pub fn chorded_corona(n: usize) -> Graph {
    let mut g = corona(&cycle(n).unwrap());
    g.add_edge(0, n / 2).unwrap();
    g
}
