//! Maximum matchings in general graphs, the Tutte condition, and the
//! fixed-edge classification.

use std::collections::VecDeque;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{edge, odd_component_count, Edge, Graph, Vertex};

/// A set of pairwise non-adjacent edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    edges: Vec<Edge>,
    covered: Vec<Vertex>,
    order: usize,
}

impl Matching {
    /// Builds a matching from its edges; fails if two edges share a vertex.
    pub fn new(order: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| edge(u, v)).collect();
        edges.sort_unstable();
        let mut covered: Vec<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        covered.sort_unstable();
        if let Some(&v) = covered.iter().find(|&&v| v >= order) {
            return Err(Error::VertexOutOfRange { vertex: v, order });
        }
        if let Some((&v, _)) = covered.iter().tuple_windows().find(|(a, b)| a == b) {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} is covered twice"
            )));
        }
        Ok(Matching {
            edges,
            covered,
            order,
        })
    }

    fn from_mates(mate: &[Option<Vertex>]) -> Self {
        let edges: Vec<Edge> = mate
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&w| v < w).map(|w| (v, w)))
            .collect();
        Matching::new(mate.len(), edges).expect("mate array is an involution")
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sorted list of matched vertices.
    pub fn covered(&self) -> &[Vertex] {
        &self.covered
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_perfect(&self) -> bool {
        self.covered.len() == self.order
    }
}

/// Edmonds' blossom algorithm, O(V^3).
struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<Option<Vertex>>,
    parent: Vec<Option<Vertex>>,
    base: Vec<Vertex>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<Vertex>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let mut mate = vec![None; n];
        // greedy start
        for v in 0..n {
            if mate[v].is_none() {
                if let Some(&w) = g.neighbors(v).iter().find(|&&w| mate[w].is_none()) {
                    mate[v] = Some(w);
                    mate[w] = Some(v);
                }
            }
        }
        Blossom {
            g,
            mate,
            parent: vec![None; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: Vertex, mut b: Vertex) -> Vertex {
        let mut on_path = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            match self.mate[a] {
                Some(m) => a = self.parent[m].expect("matched vertex on alternating path"),
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            let m = self.mate[b].expect("second path meets the first");
            b = self.parent[m].expect("matched vertex on alternating path");
        }
    }

    fn mark_path(&mut self, mut v: Vertex, b: Vertex, mut child: Vertex) {
        while self.base[v] != b {
            let m = self.mate[v].expect("blossom path alternates");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("blossom path alternates");
        }
    }

    /// Searches for an augmenting path from `root`; returns its free endpoint.
    fn find_path(&mut self, root: Vertex) -> Option<Vertex> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let to_is_outer = to == root
                    || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if to_is_outer {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.used[m] = true;
                            self.queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: Vertex) {
        loop {
            let pv = self.parent[v].expect("augmenting path is rooted");
            let next = self.mate[pv];
            self.mate[v] = Some(pv);
            self.mate[pv] = Some(v);
            match next {
                Some(w) => v = w,
                None => break,
            }
        }
    }

    fn run(mut self) -> Vec<Option<Vertex>> {
        for v in 0..self.g.order() {
            if self.mate[v].is_none() {
                if let Some(end) = self.find_path(v) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// A maximum-cardinality matching.
pub fn maximum_matching(g: &Graph) -> Matching {
    Matching::from_mates(&Blossom::new(g).run())
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order().is_multiple_of(2) && 2 * maximum_matching(g).len() == g.order()
}

/// A vertex set violating the Tutte condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TutteWitness {
    pub set: Vec<Vertex>,
    pub odd_count: usize,
}

/// Largest order accepted by [`tutte_witness`].
pub const TUTTE_WITNESS_ORDER_CAP: usize = 20;

/// Smallest set `S` (lexicographically least among those) with more than
/// `|S|` odd components in `g - S`, or `None` if `g` has a perfect matching.
pub fn tutte_witness(g: &Graph) -> Result<Option<TutteWitness>> {
    let n = g.order();
    if n > TUTTE_WITNESS_ORDER_CAP {
        return Err(Error::OrderTooLarge {
            order: n,
            cap: TUTTE_WITNESS_ORDER_CAP,
        });
    }
    if has_perfect_matching(g) {
        return Ok(None);
    }
    for k in 0..=n {
        for set in (0..n).combinations(k) {
            let odd_count = odd_component_count(g, &set);
            if odd_count > k {
                return Ok(Some(TutteWitness { set, odd_count }));
            }
        }
    }
    Err(Error::StructureViolation(
        "no Tutte set found for a graph without a perfect matching".into(),
    ))
}

/// Role of an edge with respect to the perfect matchings of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeClass {
    /// In every perfect matching.
    FixedDouble,
    /// In no perfect matching.
    FixedSingle,
    Free,
    /// The graph has no perfect matching at all.
    NoPerfectMatching,
}

pub fn classify_edge(g: &Graph, e: Edge) -> Result<EdgeClass> {
    let (u, v) = e;
    if !g.has_edge(u, v) {
        return Err(Error::EdgeNotInGraph(edge(u, v)));
    }
    if !has_perfect_matching(g) {
        return Ok(EdgeClass::NoPerfectMatching);
    }
    let mut without = g.clone();
    without.remove_edge(u, v);
    if !has_perfect_matching(&without) {
        return Ok(EdgeClass::FixedDouble);
    }
    let (rest, _) = g.remove_vertices(&[u, v]);
    if !has_perfect_matching(&rest) {
        return Ok(EdgeClass::FixedSingle);
    }
    Ok(EdgeClass::Free)
}

/// Classification of every edge, in edge-index order.
pub fn classify_edges(g: &Graph) -> Vec<(Edge, EdgeClass)> {
    g.edges()
        .into_iter()
        .map(|e| (e, classify_edge(g, e).expect("edge taken from the graph")))
        .collect()
}
