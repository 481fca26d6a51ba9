//! Named graphs and graph operations.
//!
//! Labeling conventions:
//! - `path(n)`: edges `i -- i+1`.
//! - `cycle(n)`: path plus `n-1 -- 0`.
//! - `star(k)`: center `0`, leaves `1..=k`.
//! - `complete_bipartite(a, b)`: sides `0..a` and `a..a+b`.
//! - `corona(g)`: the pendant of vertex `i` is `n + i`.
//! - `join(g, h)`: vertices of `h` are shifted by `g.order()`.
//! - `compose(h, ..)`: host vertices first, then the rest of each attached graph in order.

use super::{Graph, Vertex};
use crate::error::{Error, Result};

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.push_edge_unchecked(u, v);
        }
    }
    g.sort_adjacency();
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The star K(1,k).
pub fn star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("star needs k >= 1".into()));
    }
    Graph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter(
            "complete bipartite graph needs both sides nonempty".into(),
        ));
    }
    Graph::from_edges(
        a + b,
        (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))),
    )
}

/// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("petersen edges are simple")
}

/// `g` with one new pendant neighbor per vertex; vertex `i` gets pendant `n + i`.
pub fn corona(g: &Graph) -> Graph {
    let n = g.order();
    let mut out = Graph::new(2 * n);
    for (u, v) in g.edges() {
        out.push_edge_unchecked(u, v);
    }
    for i in 0..n {
        out.push_edge_unchecked(i, n + i);
    }
    out.sort_adjacency();
    out
}

pub fn join(g: &Graph, h: &Graph) -> Graph {
    let shift = g.order();
    let mut out = Graph::new(g.order() + h.order());
    for (u, v) in g.edges() {
        out.push_edge_unchecked(u, v);
    }
    for (u, v) in h.edges() {
        out.push_edge_unchecked(u + shift, v + shift);
    }
    for u in 0..g.order() {
        for v in 0..h.order() {
            out.push_edge_unchecked(u, v + shift);
        }
    }
    out.sort_adjacency();
    out
}

/// Result of [`compose`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    pub graph: Graph,
    /// `fusion[i][x]` is the id in `graph` of vertex `x` of the i-th attached graph.
    pub fusion: Vec<Vec<Vertex>>,
}

/// Builds `H[F_1, ..., F_p]`: a disjoint copy of each `F_i` with its chosen
/// vertex identified with host vertex `i`.
pub fn compose(host: &Graph, attachments: &[(Graph, Vertex)]) -> Result<Composition> {
    let p = host.order();
    if attachments.len() != p {
        return Err(Error::AttachmentMismatch {
            expected: p,
            found: attachments.len(),
        });
    }
    if p < 2 {
        return Err(Error::InvalidParameter("host must have order >= 2".into()));
    }
    if !host.is_connected() {
        return Err(Error::Disconnected);
    }
    for (f, v) in attachments {
        if *v >= f.order() {
            return Err(Error::VertexOutOfRange {
                vertex: *v,
                order: f.order(),
            });
        }
    }

    let total: usize = attachments.iter().map(|(f, _)| f.order()).sum();
    let mut out = Graph::new(total);
    for (u, v) in host.edges() {
        out.push_edge_unchecked(u, v);
    }
    let mut next = p;
    let mut fusion = Vec::with_capacity(p);
    for (i, (f, root)) in attachments.iter().enumerate() {
        let map: Vec<Vertex> = f
            .vertices()
            .map(|x| {
                if x == *root {
                    i
                } else {
                    next += 1;
                    next - 1
                }
            })
            .collect();
        for (a, b) in f.edges() {
            out.push_edge_unchecked(map[a], map[b]);
        }
        fusion.push(map);
    }
    out.sort_adjacency();
    Ok(Composition { graph: out, fusion })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn named_graphs() {
        assert_eq!(complete(4).unwrap().size(), 6);
        let c6 = cycle(6).unwrap();
        assert!(c6.vertices().all(|v| c6.degree(v) == 2));
        assert_eq!(path(2).unwrap(), complete(2).unwrap());
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(complete(0).is_err());
        let p = petersen();
        assert_eq!((p.order(), p.size()), (10, 15));
        assert!(p.vertices().all(|v| p.degree(v) == 3));
    }

    #[test]
    fn corona_examples() {
        let k3 = corona(&complete(3).unwrap());
        assert_eq!((k3.order(), k3.size()), (6, 6));
        assert_eq!(corona(&Graph::new(1)), complete(2).unwrap());
        for n in 1..=7 {
            let g = corona(&complete(n).unwrap());
            assert_eq!(g.size(), n * (n + 1) / 2);
            assert_eq!(g.vertices().filter(|&v| g.degree(v) == 1).count(), if n == 1 { 2 } else { n });
        }
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::new(1);
        let k2 = complete(2).unwrap();
        assert_eq!(join(&k1, &k1), k2);
        assert_eq!(join(&k2, &k1), complete(3).unwrap());
        assert_eq!(join(&k2, &k2), complete(4).unwrap());
        let g = join(&cycle(5).unwrap(), &path(3).unwrap());
        assert_eq!(g.order(), 8);
        assert_eq!(g.size(), 5 + 2 + 15);
    }

    #[test]
    fn compose_examples() {
        let k2 = complete(2).unwrap();
        let c = compose(&k2, &[(k2.clone(), 0), (k2.clone(), 1)]).unwrap();
        assert!(is_isomorphic(&c.graph, &path(4).unwrap()).unwrap());
        assert_eq!(c.fusion, vec![vec![0, 2], vec![3, 1]]);

        let k4 = complete(4).unwrap();
        let c = compose(&k4, &vec![(k2.clone(), 0); 4]).unwrap();
        assert_eq!(c.graph, corona(&k4));

        let c = compose(&k2, &[(cycle(4).unwrap(), 2), (k2.clone(), 0)]).unwrap();
        assert_eq!((c.graph.order(), c.graph.size()), (6, 6));
    }

    #[test]
    fn compose_errors() {
        let k2 = complete(2).unwrap();
        assert_eq!(
            compose(&k2, &[(k2.clone(), 0)]).unwrap_err(),
            Error::AttachmentMismatch {
                expected: 2,
                found: 1
            }
        );
        assert_eq!(
            compose(&Graph::new(2), &[(k2.clone(), 0), (k2.clone(), 0)]).unwrap_err(),
            Error::Disconnected
        );
        assert!(compose(&k2, &[(k2.clone(), 2), (k2.clone(), 0)]).is_err());
    }
}
