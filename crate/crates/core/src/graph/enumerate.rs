//! Exhaustive enumeration of labeled graphs on a fixed vertex set.
//!
//! Graph number `mask` has edge `pairs(n)[k]` iff bit `k` of `mask` is set.
//! Feasible only for small orders: there are `2^(n(n-1)/2)` labeled graphs.

use super::{Edge, Graph};

/// Largest order accepted by the enumerators (`2^28` graphs).
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Vertex pairs `(i, j)`, `i < j`, in lexicographic order.
pub fn pairs(n: usize) -> Vec<Edge> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

pub fn graph_from_mask(n: usize, pairs: &[Edge], mask: u64) -> Graph {
    let mut g = Graph::new(n);
    for (k, &(u, v)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            g.push_edge_unchecked(u, v);
        }
    }
    g.sort_adjacency();
    g
}

/// Number of labeled graphs of order `n`.
pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Every labeled graph of order `n`, in mask order.
///
/// # Panics
/// If `n > MAX_ENUMERATION_ORDER`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= MAX_ENUMERATION_ORDER, "order {n} too large to enumerate");
    let pairs = pairs(n);
    (0..labeled_count(n)).map(move |mask| graph_from_mask(n, &pairs, mask))
}

/// Every connected labeled graph of order `n`.
pub fn connected_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    labeled_graphs(n).filter(Graph::is_connected)
}
