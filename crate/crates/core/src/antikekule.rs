//! Anti-Kekulé sets: edge sets whose removal leaves the graph connected but
//! without a perfect matching. Exact minimum size by exhaustive search.
//!
//! The search is exponential in the number of edges; it is meant for graphs
//! with at most about 24 edges.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::recognize;
use crate::graph::{bridges, edge, Edge, Graph};
use crate::matching::{classify_edge, has_perfect_matching, EdgeClass};

/// The anti-Kekulé number of a connected graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum AkValue {
    /// The graph itself has no perfect matching; the empty set qualifies.
    Zero,
    /// No anti-Kekulé set exists.
    NoneExists,
    /// Minimum size of an anti-Kekulé set (at least one).
    Number(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AkResult {
    pub value: AkValue,
    /// All minimum anti-Kekulé sets in lexicographic order, when requested.
    pub min_sets: Option<Vec<Vec<Edge>>>,
}

pub fn is_anti_kekule_set(g: &Graph, s: &[Edge]) -> Result<bool> {
    for &(u, v) in s {
        if !g.has_edge(u, v) {
            return Err(Error::EdgeNotInGraph(edge(u, v)));
        }
    }
    let rest = g.without_edges(s);
    Ok(rest.is_connected() && !has_perfect_matching(&rest))
}

/// Computes the anti-Kekulé number, searching sets of size up to `max_k`
/// (default: the number of edges). Graphs in the family are answered without
/// search.
pub fn anti_kekule_number(g: &Graph, max_k: Option<usize>, all_min_sets: bool) -> Result<AkResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !has_perfect_matching(g) {
        return Ok(AkResult {
            value: AkValue::Zero,
            min_sets: all_min_sets.then(|| vec![Vec::new()]),
        });
    }
    if recognize(g)?.is_member() {
        return Ok(AkResult {
            value: AkValue::NoneExists,
            min_sets: all_min_sets.then(Vec::new),
        });
    }

    let m = g.size();
    let max_k = max_k.unwrap_or(m).min(m);
    let edges = g.edges();
    for k in 1..=max_k {
        let mut found = Vec::new();
        if k == 1 {
            // a single edge works iff it is a non-bridge fixed double edge
            let cut = bridges(g);
            for &e in &edges {
                if cut.binary_search(&e).is_err() && classify_edge(g, e)? == EdgeClass::FixedDouble {
                    found.push(vec![e]);
                    if !all_min_sets {
                        break;
                    }
                }
            }
        } else {
            let mut search = SubsetSearch {
                edges: &edges,
                k,
                all: all_min_sets,
                chosen: Vec::with_capacity(k),
                found: &mut found,
            };
            search.extend(g.clone(), 0);
        }
        if !found.is_empty() {
            return Ok(AkResult {
                value: AkValue::Number(k),
                min_sets: all_min_sets.then_some(found),
            });
        }
    }
    // the complement of a bad spanning tree is an anti-Kekulé set
    let bound = m + 1 - g.order();
    if max_k >= bound {
        return Err(Error::StructureViolation(format!(
            "no anti-Kekulé set of size at most {max_k} in a non-member"
        )));
    }
    Err(Error::BoundExhausted { max_k })
}

struct SubsetSearch<'a> {
    edges: &'a [Edge],
    k: usize,
    all: bool,
    chosen: Vec<Edge>,
    found: &'a mut Vec<Vec<Edge>>,
}

impl SubsetSearch<'_> {
    /// Extends `chosen` with edges of index `>= from`; `rest` is the graph
    /// minus `chosen`, still connected.
    fn extend(&mut self, rest: Graph, from: usize) -> bool {
        if self.chosen.len() == self.k {
            if !has_perfect_matching(&rest) {
                self.found.push(self.chosen.clone());
                return !self.all;
            }
            return false;
        }
        let need = self.k - self.chosen.len();
        if self.edges.len() - from < need {
            return false;
        }
        // removing a bridge disconnects, and later removals cannot reconnect
        let cut = bridges(&rest);
        for i in from..=self.edges.len() - need {
            let e = self.edges[i];
            if cut.binary_search(&e).is_ok() {
                continue;
            }
            let mut next = rest.clone();
            next.remove_edge(e.0, e.1);
            self.chosen.push(e);
            let stop = self.extend(next, i + 1);
            self.chosen.pop();
            if stop {
                return true;
            }
        }
        false
    }
}
