//! Seeded random generation of family members and of trees with a perfect
//! matching, by running the recursive constructions forwards.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{compose, cycle, Graph};

const CYCLE_PROBABILITY: f64 = 0.25;

fn check_half_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("half order must be at least 1".into()));
    }
    Ok(())
}

/// A pseudorandom member of order `2 * half_order`. Deterministic in `seed`.
pub fn sample_member(half_order: usize, seed: u64) -> Result<Graph> {
    check_half_order(half_order)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(member(half_order, &mut rng))
}

fn k2() -> Graph {
    Graph::from_edges(2, [(0, 1)]).expect("K2")
}

fn member<R: Rng>(half: usize, rng: &mut R) -> Graph {
    if half == 1 {
        return k2();
    }
    if rng.gen_bool(CYCLE_PROBABILITY) {
        return cycle(2 * half).expect("order >= 4");
    }
    let p = rng.gen_range(2..=half);
    let parts = random_composition(half, p, rng);
    let host = random_connected(p, rng);
    let attachments: Vec<(Graph, usize)> = parts
        .into_iter()
        .map(|part| {
            let f = member(part, rng);
            let root = rng.gen_range(0..f.order());
            (f, root)
        })
        .collect();
    compose(&host, &attachments)
        .expect("connected host with matching attachment count")
        .graph
}

/// `total` split into `parts` positive summands, uniformly over compositions.
fn random_composition<R: Rng>(total: usize, parts: usize, rng: &mut R) -> Vec<usize> {
    let mut cuts: Vec<usize> = (1..total).collect();
    cuts.shuffle(rng);
    let mut cuts = cuts[..parts - 1].to_vec();
    cuts.sort_unstable();
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts.into_iter().chain([total]) {
        out.push(c - prev);
        prev = c;
    }
    out
}

/// Random labeled tree plus each remaining pair with a random density.
fn random_connected<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).expect("new tree edge");
    }
    let density: f64 = rng.gen();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(density) {
                g.add_edge(u, v).expect("new edge");
            }
        }
    }
    g
}

/// A pseudorandom tree of order `2 * half_order` with a perfect matching,
/// built by joining two smaller such trees with one edge, starting from K2.
pub fn sample_pm_tree(half_order: usize, seed: u64) -> Result<Graph> {
    check_half_order(half_order)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(pm_tree(half_order, &mut rng))
}

fn pm_tree<R: Rng>(half: usize, rng: &mut R) -> Graph {
    if half == 1 {
        return k2();
    }
    let a = rng.gen_range(1..half);
    let left = pm_tree(a, rng);
    let right = pm_tree(half - a, rng);
    let shift = left.order();
    let mut t = Graph::new(shift + right.order());
    for (u, v) in left.edges() {
        t.push_edge_unchecked(u, v);
    }
    for (u, v) in right.edges() {
        t.push_edge_unchecked(u + shift, v + shift);
    }
    let x = rng.gen_range(0..shift);
    let y = shift + rng.gen_range(0..right.order());
    t.push_edge_unchecked(x, y);
    t.sort_adjacency();
    t
}
