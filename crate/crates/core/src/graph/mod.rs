//! Simple undirected graphs on dense vertex ids `0..n`.

mod connectivity;
mod edgelist;
pub mod enumerate;
mod generators;
mod graph6;
mod iso;

pub use connectivity::{
    block_cut_decomposition, bridges, components, cut_vertices, is_nonseparable, is_two_connected,
    odd_component_count, BlockCutDecomposition,
};
pub(crate) use connectivity::components_avoiding;
pub use edgelist::{encode_edge_list, parse_edge_list};
pub use generators::{
    complete, complete_bipartite, compose, corona, cycle, join, path, petersen, star, Composition,
};
pub use graph6::{encode_graph6, parse_graph6};
pub use iso::{is_isomorphic, ISOMORPHISM_ORDER_CAP};
pub(crate) use iso::isomorphic;

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Unordered vertex pair, stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

/// Normalizes `(u, v)` so that the smaller endpoint comes first.
#[inline]
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A finite simple undirected graph.
///
/// Neighbor lists are kept sorted, so two graphs compare equal exactly when
/// they have the same order and the same edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    size: usize,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            size: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.size += 1;
                Ok(())
            }
        }
    }

    /// Removes the edge if present; returns whether it was.
    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if u >= self.order() || v >= self.order() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).expect("asymmetric adjacency");
                self.adj[v].remove(pos);
                self.size -= 1;
                true
            }
            Err(_) => false,
        }
    }

    /// Appends a new isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list of `v`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order. The position of
    /// an edge in this list is its edge index.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size);
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size + 1 == self.order() && self.is_connected()
    }

    /// True iff the graph is connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.order() >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected()
    }

    /// Subgraph induced by `keep`, relabeled densely in the order given.
    /// `keep` must not contain duplicates.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut sub = Graph::new(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    sub.push_edge_unchecked(i, j);
                }
            }
        }
        sub.sort_adjacency();
        sub
    }

    /// The graph minus `removed`, relabeled densely. Returns the subgraph and
    /// the list mapping new ids to old ids.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut gone = vec![false; self.order()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !gone[v]).collect();
        (self.induced_subgraph(&keep), keep)
    }

    /// Spanning subgraph with the given edges removed (missing edges ignored).
    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let mut g = self.clone();
        for &(u, v) in removed {
            g.remove_edge(u, v);
        }
        g
    }

    /// Spanning subgraph on the same vertex set with exactly `edges`.
    pub fn spanning_subgraph(&self, edges: &[Edge]) -> Result<Graph> {
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(Error::EdgeNotInGraph(edge(u, v)));
            }
        }
        Graph::from_edges(self.order(), edges.iter().copied())
    }

    /// Adds an edge known to be new; adjacency must be re-sorted afterwards.
    pub(crate) fn push_edge_unchecked(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.size += 1;
    }

    pub(crate) fn sort_adjacency(&mut self) {
        for a in &mut self.adj {
            a.sort_unstable();
        }
    }
}
