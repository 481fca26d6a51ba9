use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph, Vertex};
use crate::spanning::tree_bad_vertex;

/// Ids at or above this value denote virtual pendant vertices in glue nodes.
pub const VIRTUAL_VERTEX_BASE: Vertex = 1 << 30;

/// Replayable construction of a graph from copies of K2 and even cycles.
///
/// Vertex ids refer to the certified graph, except for the virtual pendant
/// introduced by each [`Certificate::Glue`] node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    BaseEdge {
        u: Vertex,
        v: Vertex,
    },
    /// An even cycle, listed in cyclic order.
    BaseCycle {
        cycle: Vec<Vertex>,
    },
    /// A connected host graph with one pendant leaf hung on each host vertex.
    Corona {
        hosts: Vec<Vertex>,
        host_edges: Vec<Edge>,
        /// `(host, leaf)` pairs.
        pendants: Vec<(Vertex, Vertex)>,
    },
    /// `left` certifies one side of a separation at `attach`, extended by the
    /// virtual leaf `pendant` hanging on `attach`; `right` certifies the other
    /// side, which also contains `attach`. The certified graph is the union of
    /// both with the virtual leaf dropped.
    Glue {
        attach: Vertex,
        pendant: Vertex,
        left: Box<Certificate>,
        right: Box<Certificate>,
    },
}

/// Why a certificate failed to verify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateDefect {
    RepeatedVertex(Vertex),
    OddCycle(usize),
    ShortCycle(usize),
    LoopEdge(Vertex),
    CoronaTooSmall,
    CoronaHostEdge(Edge),
    CoronaHostDisconnected,
    CoronaPairing(Vertex),
    GluePendant(Vertex),
    GlueAttach(Vertex),
    GlueOverlap(Vertex),
    VertexSetMismatch,
    EdgeSetMismatch,
}

impl CertificateDefect {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            CertificateDefect::RepeatedVertex(_) => "repeated_vertex",
            CertificateDefect::OddCycle(_) => "odd_cycle",
            CertificateDefect::ShortCycle(_) => "short_cycle",
            CertificateDefect::LoopEdge(_) => "loop_edge",
            CertificateDefect::CoronaTooSmall => "corona_too_small",
            CertificateDefect::CoronaHostEdge(_) => "corona_host_edge",
            CertificateDefect::CoronaHostDisconnected => "corona_host_disconnected",
            CertificateDefect::CoronaPairing(_) => "corona_pairing",
            CertificateDefect::GluePendant(_) => "glue_pendant",
            CertificateDefect::GlueAttach(_) => "glue_attach",
            CertificateDefect::GlueOverlap(_) => "glue_overlap",
            CertificateDefect::VertexSetMismatch => "vertex_set_mismatch",
            CertificateDefect::EdgeSetMismatch => "edge_set_mismatch",
        }
    }
}

impl fmt::Display for CertificateDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())?;
        match self {
            CertificateDefect::RepeatedVertex(v)
            | CertificateDefect::LoopEdge(v)
            | CertificateDefect::CoronaPairing(v)
            | CertificateDefect::GluePendant(v)
            | CertificateDefect::GlueAttach(v)
            | CertificateDefect::GlueOverlap(v) => write!(f, " (vertex {v})"),
            CertificateDefect::OddCycle(n) | CertificateDefect::ShortCycle(n) => {
                write!(f, " (length {n})")
            }
            CertificateDefect::CoronaHostEdge((u, v)) => write!(f, " ({u}-{v})"),
            _ => Ok(()),
        }
    }
}

impl std::error::Error for CertificateDefect {}

#[derive(Debug, Default)]
struct Replayed {
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<Edge>,
}

fn distinct(vs: &[Vertex]) -> std::result::Result<BTreeSet<Vertex>, CertificateDefect> {
    let mut set = BTreeSet::new();
    for &v in vs {
        if !set.insert(v) {
            return Err(CertificateDefect::RepeatedVertex(v));
        }
    }
    Ok(set)
}

fn replay(c: &Certificate) -> std::result::Result<Replayed, CertificateDefect> {
    use CertificateDefect as D;
    match c {
        Certificate::BaseEdge { u, v } => {
            if u == v {
                return Err(D::LoopEdge(*u));
            }
            Ok(Replayed {
                vertices: [*u, *v].into(),
                edges: [edge(*u, *v)].into(),
            })
        }
        Certificate::BaseCycle { cycle } => {
            let len = cycle.len();
            if len < 4 {
                return Err(D::ShortCycle(len));
            }
            if len % 2 == 1 {
                return Err(D::OddCycle(len));
            }
            let vertices = distinct(cycle)?;
            let edges = (0..len)
                .map(|i| edge(cycle[i], cycle[(i + 1) % len]))
                .collect();
            Ok(Replayed { vertices, edges })
        }
        Certificate::Corona {
            hosts,
            host_edges,
            pendants,
        } => {
            if hosts.len() < 2 {
                return Err(D::CoronaTooSmall);
            }
            let host_set = distinct(hosts)?;
            let mut edges = BTreeSet::new();
            for &(u, v) in host_edges {
                if u == v || !host_set.contains(&u) || !host_set.contains(&v) {
                    return Err(D::CoronaHostEdge((u, v)));
                }
                if !edges.insert(edge(u, v)) {
                    return Err(D::CoronaHostEdge((u, v)));
                }
            }
            let index: Vec<Vertex> = host_set.iter().copied().collect();
            let local = |v: Vertex| index.binary_search(&v).expect("host vertex");
            let host = Graph::from_edges(
                index.len(),
                edges.iter().map(|&(u, v)| (local(u), local(v))),
            )
            .map_err(|_| D::CoronaHostDisconnected)?;
            if !host.is_connected() {
                return Err(D::CoronaHostDisconnected);
            }

            let mut vertices = host_set.clone();
            let mut paired = BTreeSet::new();
            for &(h, leaf) in pendants {
                if !host_set.contains(&h) || !paired.insert(h) {
                    return Err(D::CoronaPairing(h));
                }
                if !vertices.insert(leaf) {
                    return Err(D::CoronaPairing(leaf));
                }
                edges.insert(edge(h, leaf));
            }
            if paired.len() != host_set.len() {
                let missing = host_set.difference(&paired).next().copied();
                return Err(D::CoronaPairing(missing.unwrap_or_default()));
            }
            Ok(Replayed { vertices, edges })
        }
        Certificate::Glue {
            attach,
            pendant,
            left,
            right,
        } => {
            let mut l = replay(left)?;
            let r = replay(right)?;
            let pendant_edges: Vec<&Edge> = l
                .edges
                .iter()
                .filter(|&&(u, v)| u == *pendant || v == *pendant)
                .collect();
            if pendant_edges.len() != 1 || *pendant_edges[0] != edge(*attach, *pendant) {
                return Err(D::GluePendant(*pendant));
            }
            if r.vertices.contains(pendant) {
                return Err(D::GluePendant(*pendant));
            }
            if !r.vertices.contains(attach) {
                return Err(D::GlueAttach(*attach));
            }
            l.edges.remove(&edge(*attach, *pendant));
            l.vertices.remove(pendant);
            if let Some(&v) = l.vertices.intersection(&r.vertices).find(|&&v| v != *attach) {
                return Err(D::GlueOverlap(v));
            }
            l.vertices.extend(r.vertices);
            l.edges.extend(r.edges);
            Ok(l)
        }
    }
}

/// Replays `c` and checks that it rebuilds exactly `g`.
pub fn verify_certificate(g: &Graph, c: &Certificate) -> std::result::Result<(), CertificateDefect> {
    let built = replay(c)?;
    if !built.vertices.iter().copied().eq(g.vertices()) {
        return Err(CertificateDefect::VertexSetMismatch);
    }
    if !built.edges.iter().copied().eq(g.edges()) {
        return Err(CertificateDefect::EdgeSetMismatch);
    }
    Ok(())
}

impl Certificate {
    /// Number of base pieces (edges, cycles, corona pendant edges) used.
    pub fn leaf_count(&self) -> usize {
        match self {
            Certificate::BaseEdge { .. } | Certificate::BaseCycle { .. } => 1,
            Certificate::Corona { hosts, .. } => hosts.len(),
            Certificate::Glue { left, right, .. } => left.leaf_count() + right.leaf_count(),
        }
    }
}

/// A spanning tree without a perfect matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub tree: Vec<Edge>,
    /// Least vertex whose removal leaves at least three odd components.
    pub bad_vertex: Option<Vertex>,
    pub odd_order: bool,
}

impl Witness {
    /// Wraps a spanning tree of `g`, locating the failing vertex.
    pub fn from_tree(g: &Graph, tree: Vec<Edge>) -> Result<Witness> {
        let t = g.spanning_subgraph(&tree)?;
        if !t.is_tree() {
            return Err(Error::InvalidWitness("edge set is not a spanning tree".into()));
        }
        let mut tree = t.edges();
        tree.sort_unstable();
        let odd_order = g.order() % 2 == 1;
        let bad_vertex = if odd_order { None } else { tree_bad_vertex(&t) };
        if !odd_order && bad_vertex.is_none() {
            return Err(Error::InvalidWitness(
                "spanning tree has a perfect matching".into(),
            ));
        }
        Ok(Witness {
            tree,
            bad_vertex,
            odd_order,
        })
    }

    /// Checks the witness against `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let again = Witness::from_tree(g, self.tree.clone())?;
        if again.odd_order != self.odd_order {
            return Err(Error::InvalidWitness("odd-order flag is wrong".into()));
        }
        if let Some(v) = self.bad_vertex {
            let t = g.spanning_subgraph(&self.tree)?;
            if v >= g.order() || crate::graph::odd_component_count(&t, &[v]) < 3 {
                return Err(Error::InvalidWitness(format!(
                    "vertex {v} does not split the tree into three odd parts"
                )));
            }
        }
        Ok(())
    }

    pub fn tree_graph(&self, order: usize) -> Result<Graph> {
        Graph::from_edges(order, self.tree.iter().copied())
    }
}
