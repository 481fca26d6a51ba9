use std::collections::VecDeque;

use super::{edge, Edge, Graph, Vertex};
use crate::error::{Error, Result};

/// Connected components as sorted vertex lists, ordered by least vertex.
pub fn components(g: &Graph) -> Vec<Vec<Vertex>> {
    components_avoiding(g, &vec![false; g.order()])
}

pub(crate) fn components_avoiding(g: &Graph, removed: &[bool]) -> Vec<Vec<Vertex>> {
    let n = g.order();
    let mut seen = removed.to_vec();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut comp = vec![s];
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Number of odd-order components of `g - s`.
pub fn odd_component_count(g: &Graph, s: &[Vertex]) -> usize {
    let mut removed = vec![false; g.order()];
    for &v in s {
        removed[v] = true;
    }
    components_avoiding(g, &removed)
        .iter()
        .filter(|c| c.len() % 2 == 1)
        .count()
}

/// Blocks (maximal nonseparable subgraphs) of a connected graph and the cut
/// vertices joining them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutDecomposition {
    /// Sorted vertex set of each block, blocks ordered by vertex list.
    pub blocks: Vec<Vec<Vertex>>,
    /// Edge set of each block, parallel to `blocks`.
    pub block_edges: Vec<Vec<Edge>>,
    pub cut_vertices: Vec<Vertex>,
    /// Cut vertices contained in each block, parallel to `blocks`.
    pub incidence: Vec<Vec<Vertex>>,
}

impl BlockCutDecomposition {
    /// Indices of blocks containing exactly one cut vertex.
    pub fn end_blocks(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.incidence[b].len() == 1)
            .collect()
    }

    /// Indices of blocks containing `v`.
    pub fn blocks_containing(&self, v: Vertex) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&b| self.blocks[b].binary_search(&v).is_ok())
            .collect()
    }
}

/// Edge sets of the blocks of `g` (Hopcroft-Tarjan, iterative), plus the
/// isolated vertices, which form edgeless blocks of their own.
fn raw_blocks(g: &Graph) -> (Vec<Vec<Edge>>, Vec<Vertex>) {
    const UNSEEN: usize = usize::MAX;
    let n = g.order();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut blocks = Vec::new();
    let mut isolated = Vec::new();
    let mut edge_stack: Vec<Edge> = Vec::new();
    // (vertex, parent, next neighbor position)
    let mut stack: Vec<(Vertex, Vertex, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = timer;
            timer += 1;
            isolated.push(root);
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, UNSEEN, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, parent, i) = *frame;
            if i < g.degree(v) {
                frame.2 += 1;
                let w = g.neighbors(v)[i];
                if disc[w] == UNSEEN {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    edge_stack.push((v, w));
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(edge(e.0, e.1));
                            if e == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
    }
    (blocks, isolated)
}

fn block_vertices(edges: &[Edge]) -> Vec<Vertex> {
    let mut vs: Vec<Vertex> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    vs.sort_unstable();
    vs.dedup();
    vs
}

/// Edges whose removal increases the number of components, sorted.
pub fn bridges(g: &Graph) -> Vec<Edge> {
    let (blocks, _) = raw_blocks(g);
    let mut out: Vec<Edge> = blocks
        .into_iter()
        .filter(|b| b.len() == 1)
        .map(|b| b[0])
        .collect();
    out.sort_unstable();
    out
}

/// Vertices whose removal increases the number of components.
pub fn cut_vertices(g: &Graph) -> Vec<Vertex> {
    let (blocks, _) = raw_blocks(g);
    let mut count = vec![0usize; g.order()];
    for b in &blocks {
        for v in block_vertices(b) {
            count[v] += 1;
        }
    }
    (0..g.order()).filter(|&v| count[v] >= 2).collect()
}

pub fn block_cut_decomposition(g: &Graph) -> Result<BlockCutDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (raw, isolated) = raw_blocks(g);
    let mut pairs: Vec<(Vec<Vertex>, Vec<Edge>)> = raw
        .into_iter()
        .map(|edges| (block_vertices(&edges), edges))
        .collect();
    pairs.extend(isolated.into_iter().map(|v| (vec![v], Vec::new())));
    pairs.sort();

    let mut count = vec![0usize; g.order()];
    for (vs, _) in &pairs {
        for &v in vs {
            count[v] += 1;
        }
    }
    let cut: Vec<Vertex> = (0..g.order()).filter(|&v| count[v] >= 2).collect();
    let incidence = pairs
        .iter()
        .map(|(vs, _)| vs.iter().copied().filter(|&v| count[v] >= 2).collect())
        .collect();
    let (blocks, block_edges) = pairs.into_iter().unzip();
    Ok(BlockCutDecomposition {
        blocks,
        block_edges,
        cut_vertices: cut,
        incidence,
    })
}

/// Connected with no cut vertex. K1 and K2 qualify.
pub fn is_nonseparable(g: &Graph) -> bool {
    g.is_connected() && cut_vertices(g).is_empty()
}

/// Nonseparable of order at least 3.
pub fn is_two_connected(g: &Graph) -> bool {
    g.order() >= 3 && is_nonseparable(g)
}
