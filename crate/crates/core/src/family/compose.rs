use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Replaces the pendant vertex `v` of `g` by the graph `f`, identifying the
/// vertex `w` of `f` with the neighbor of `v`.
///
/// The vertices of `g - v` keep their relative order and come first, followed
/// by the vertices of `f` other than `w` in ascending order.
pub fn pendant_replace(g: &Graph, v: Vertex, f: &Graph, w: Vertex) -> Result<Graph> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    if w >= f.order() {
        return Err(Error::VertexOutOfRange {
            vertex: w,
            order: f.order(),
        });
    }
    if g.degree(v) != 1 {
        return Err(Error::NotPendant(v));
    }
    let u = g.neighbors(v)[0];
    let (base, map) = g.remove_vertices(&[v]);
    let u_new = map.binary_search(&u).expect("neighbor survives");

    let mut out = Graph::new(base.order() + f.order() - 1);
    for (a, b) in base.edges() {
        out.push_edge_unchecked(a, b);
    }
    let mut next = base.order();
    let relabel: Vec<Vertex> = f
        .vertices()
        .map(|x| {
            if x == w {
                u_new
            } else {
                next += 1;
                next - 1
            }
        })
        .collect();
    for (a, b) in f.edges() {
        out.push_edge_unchecked(relabel[a], relabel[b]);
    }
    out.sort_adjacency();
    Ok(out)
}
