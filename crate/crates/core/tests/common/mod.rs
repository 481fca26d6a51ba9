//! Brute-force oracles on bitmask adjacency, written independently of the
//! library algorithms. Orders up to 32.

#![allow(dead_code)]

use itertools::Itertools;
use kekule_core::{Edge, Graph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct Bits {
    pub n: usize,
    pub adj: Vec<u32>,
}

impl Bits {
    pub fn from_edges(n: usize, edges: &[Edge]) -> Bits {
        let mut adj = vec![0u32; n];
        for &(u, v) in edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Bits { n, adj }
    }

    pub fn of(g: &Graph) -> Bits {
        Bits::from_edges(g.order(), &g.edges())
    }

    pub fn all(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    /// Vertex sets of the components of the subgraph induced by `within`.
    pub fn components(&self, within: u32) -> Vec<u32> {
        let mut left = within;
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            loop {
                let mut grown = comp;
                let mut c = comp;
                while c != 0 {
                    let v = c.trailing_zeros() as usize;
                    c &= c - 1;
                    grown |= self.adj[v] & within;
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            left &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn connected(&self) -> bool {
        self.n > 0 && self.components(self.all()).len() == 1
    }

    /// Perfect matching of the subgraph induced by `left`, by pairing the
    /// least vertex with each neighbor in turn.
    pub fn pm_within(&self, left: u32) -> bool {
        if left == 0 {
            return true;
        }
        if left.count_ones() % 2 == 1 {
            return false;
        }
        let v = left.trailing_zeros() as usize;
        let rest = left & !(1 << v);
        let mut cand = self.adj[v] & rest;
        while cand != 0 {
            let w = cand.trailing_zeros();
            cand &= cand - 1;
            if self.pm_within(rest & !(1 << w)) {
                return true;
            }
        }
        false
    }

    pub fn has_pm(&self) -> bool {
        self.pm_within(self.all())
    }

    /// Tutte's condition checked over every vertex subset.
    pub fn tutte_condition(&self) -> bool {
        let all = self.all();
        (0..=all).all(|s| {
            let odd = self
                .components(all & !s)
                .iter()
                .filter(|c| c.count_ones() % 2 == 1)
                .count();
            odd <= s.count_ones() as usize
        })
    }

    pub fn without(&self, edges: &[Edge]) -> Bits {
        let mut b = self.clone();
        for &(u, v) in edges {
            b.adj[u] &= !(1 << v);
            b.adj[v] &= !(1 << u);
        }
        b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BruteAk {
    Zero,
    NoneExists,
    Number(usize),
}

/// Least size of an edge set whose removal leaves a connected graph without a
/// perfect matching, by trying all subsets in order of size.
pub fn brute_ak(g: &Graph) -> BruteAk {
    let b = Bits::of(g);
    if !b.has_pm() {
        return BruteAk::Zero;
    }
    let edges = g.edges();
    for k in 1..=edges.len() {
        for s in edges.iter().copied().combinations(k) {
            let r = b.without(&s);
            if r.connected() && !r.has_pm() {
                return BruteAk::Number(k);
            }
        }
    }
    BruteAk::NoneExists
}

/// `tree` is a spanning tree of `g` without a perfect matching.
pub fn is_bad_spanning_tree(g: &Graph, tree: &[Edge]) -> bool {
    let n = g.order();
    tree.len() + 1 == n
        && tree.iter().all(|&(u, v)| g.has_edge(u, v))
        && {
            let t = Bits::from_edges(n, tree);
            t.connected() && !t.has_pm()
        }
}

/// All labeled graphs of order `n`, built directly from adjacency bits.
pub fn labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<Edge> = (0..n).tuple_combinations().collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let es = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, es).unwrap()
    })
}

pub fn connected_labeled(n: usize) -> impl Iterator<Item = Graph> {
    labeled(n).filter(|g| Bits::of(g).connected())
}

/// Erdős–Rényi graph with a random edge density.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

impl Bits {
    /// Every perfect matching of the subgraph induced by `left`.
    pub fn all_pms_within(&self, left: u32, acc: &mut Vec<Edge>, out: &mut Vec<Vec<Edge>>) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        let v = left.trailing_zeros() as usize;
        let rest = left & !(1 << v);
        let mut cand = self.adj[v] & rest;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            acc.push((v, w));
            self.all_pms_within(rest & !(1 << w), acc, out);
            acc.pop();
        }
    }

    pub fn all_pms(&self) -> Vec<Vec<Edge>> {
        let mut out = Vec::new();
        self.all_pms_within(self.all(), &mut Vec::new(), &mut out);
        out
    }

    /// Maximum matching size by letting the least vertex stay unmatched or
    /// pairing it with each neighbor.
    pub fn max_matching_within(&self, left: u32) -> usize {
        if left.count_ones() < 2 {
            return 0;
        }
        let v = left.trailing_zeros() as usize;
        let rest = left & !(1 << v);
        let mut best = self.max_matching_within(rest);
        let mut cand = self.adj[v] & rest;
        while cand != 0 {
            let w = cand.trailing_zeros();
            cand &= cand - 1;
            best = best.max(1 + self.max_matching_within(rest & !(1 << w)));
        }
        best
    }
}

/// Number of spanning trees by the matrix-tree theorem (Bareiss elimination
/// on the reduced Laplacian).
pub fn kirchhoff(g: &Graph) -> i128 {
    let n = g.order();
    if n <= 1 {
        return n as i128;
    }
    let m = n - 1;
    let mut a = vec![vec![0i128; m]; m];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = g.degree(i + 1) as i128;
        for &j in g.neighbors(i + 1) {
            if j >= 1 {
                row[j - 1] = -1;
            }
        }
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..m {
        if a[k][k] == 0 {
            match (k + 1..m).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[m - 1][m - 1]
}
