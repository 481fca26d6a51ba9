use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// Largest order accepted by [`is_isomorphic`].
pub const ISOMORPHISM_ORDER_CAP: usize = 10;

/// Naive backtracking isomorphism test with degree pruning, for small graphs only.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for order in [g.order(), h.order()] {
        if order > ISOMORPHISM_ORDER_CAP {
            return Err(Error::OrderTooLarge {
                order,
                cap: ISOMORPHISM_ORDER_CAP,
            });
        }
    }
    Ok(isomorphic(g, h))
}

/// Uncapped variant; exponential in the worst case.
pub(crate) fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence()
    {
        return false;
    }
    let n = g.order();
    // Map high-degree vertices first, then prefer neighbors of mapped ones.
    let mut order: Vec<Vertex> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let linked = g.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (linked, g.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(g, h, &order, 0, &mut image, &mut used)
}

fn extend(
    g: &Graph,
    h: &Graph,
    order: &[Vertex],
    depth: usize,
    image: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for x in 0..h.order() {
        if used[x] || h.degree(x) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], x));
        if !consistent {
            continue;
        }
        image[v] = x;
        used[x] = true;
        if extend(g, h, order, depth + 1, image, used) {
            return true;
        }
        used[x] = false;
    }
    image[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, corona, cycle, petersen};

    #[test]
    fn examples() {
        let c4 = cycle(4).unwrap();
        let relabeled = Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert!(is_isomorphic(&c4, &relabeled).unwrap());
        let k3k1 = corona(&complete(3).unwrap());
        assert!(!is_isomorphic(&cycle(6).unwrap(), &k3k1).unwrap());
        assert!(!is_isomorphic(&complete(4).unwrap(), &c4).unwrap());
    }

    #[test]
    fn same_degrees_different_graphs() {
        // C6 versus two disjoint triangles: both 2-regular on six vertices.
        let triangles =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!is_isomorphic(&cycle(6).unwrap(), &triangles).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        let p = petersen();
        assert!(is_isomorphic(&p, &p).unwrap());
        let big = cycle(11).unwrap();
        assert_eq!(
            is_isomorphic(&big, &big),
            Err(Error::OrderTooLarge { order: 11, cap: 10 })
        );
        assert!(isomorphic(&big, &big));
    }
}
