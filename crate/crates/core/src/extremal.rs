//! Maximum size of a member of order `2n`, and the graphs attaining it.

use crate::error::{Error, Result};
use crate::family::recognize;
use crate::graph::enumerate::connected_labeled_graphs;
use crate::graph::{complete, corona, cycle, isomorphic, Graph};

/// Largest half order accepted by [`extremal_graphs`].
pub const EXTREMAL_TABLE_CAP: usize = 10;

/// Largest half order for which [`exhaustive_search`] runs (order 6,
/// `2^15` labeled graphs).
pub const EXHAUSTIVE_HALF_ORDER_CAP: usize = 3;

/// Maximum number of edges of a member of order `2n`.
pub fn f(n: usize) -> Result<usize> {
    match n {
        0 => Err(Error::InvalidParameter("half order must be at least 1".into())),
        1 => Ok(1),
        2 => Ok(4),
        _ => Ok(n * (n + 1) / 2),
    }
}

/// The stated equality cases of the bound: K2, C4, {C6, K3∘K1}, then Kn∘K1.
///
/// For n = 3 this list is incomplete. Exhaustive search also finds the 4-cycle
/// with a pendant path of length two (K2 hosting K2 and C4), which has six
/// edges and is a member.
pub fn extremal_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > EXTREMAL_TABLE_CAP {
        return Err(Error::InvalidParameter(format!(
            "half order must lie in 1..={EXTREMAL_TABLE_CAP}, got {n}"
        )));
    }
    let kn = complete(n)?;
    Ok(match n {
        1 => vec![complete(2)?],
        2 => vec![cycle(4)?],
        3 => vec![cycle(6)?, corona(&kn)],
        _ => vec![corona(&kn)],
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub half_order: usize,
    /// Largest member size seen; `None` if the stream held no member.
    pub max_size: Option<usize>,
    /// Members of that size, pairwise non-isomorphic, in first-seen order.
    pub argmax: Vec<Graph>,
    /// Number of graphs read.
    pub examined: usize,
    /// Number of members among them.
    pub members: usize,
}

impl SearchOutcome {
    fn empty(half_order: usize) -> Self {
        SearchOutcome {
            half_order,
            max_size: None,
            argmax: Vec::new(),
            examined: 0,
            members: 0,
        }
    }

    fn offer(&mut self, g: Graph) {
        self.members += 1;
        let m = g.size();
        match self.max_size {
            Some(best) if m < best => {}
            Some(best) if m == best => {
                if !self.argmax.iter().any(|h| isomorphic(h, &g)) {
                    self.argmax.push(g);
                }
            }
            _ => {
                self.max_size = Some(m);
                self.argmax = vec![g];
            }
        }
    }

    /// Merges two outcomes for the same half order. Associative; keeps
    /// `self`'s representatives first.
    pub fn merge(mut self, other: SearchOutcome) -> SearchOutcome {
        self.examined += other.examined;
        let members = self.members + other.members;
        for g in other.argmax {
            self.offer(g);
        }
        self.members = members;
        self
    }

    /// True iff the maximum equals `f(n)` and the maximizers are exactly the
    /// known extremal graphs up to isomorphism.
    pub fn matches_known_extremal(&self) -> Result<bool> {
        if self.max_size != Some(f(self.half_order)?) {
            return Ok(false);
        }
        let expected = extremal_graphs(self.half_order)?;
        Ok(self.argmax.len() == expected.len()
            && expected
                .iter()
                .all(|e| self.argmax.iter().any(|g| isomorphic(e, g))))
    }

    /// True iff no member seen exceeds `f(n)`.
    pub fn within_bound(&self) -> Result<bool> {
        let bound = f(self.half_order)?;
        Ok(self.max_size.is_none_or(|m| m <= bound))
    }
}

/// Filters `graphs` by membership and keeps the largest members up to isomorphism.
/// Every input must be connected of order `2n`.
pub fn max_size_search<I>(graphs: I, n: usize) -> Result<SearchOutcome>
where
    I: IntoIterator<Item = Graph>,
{
    f(n)?;
    let mut out = SearchOutcome::empty(n);
    for g in graphs {
        if g.order() != 2 * n {
            return Err(Error::InvalidParameter(format!(
                "expected order {}, got {}",
                2 * n,
                g.order()
            )));
        }
        out.examined += 1;
        if recognize(&g)?.is_member() {
            out.offer(g);
        }
    }
    Ok(out)
}

/// [`max_size_search`] over every connected labeled graph of order `2n`.
pub fn exhaustive_search(n: usize) -> Result<SearchOutcome> {
    if n == 0 || n > EXHAUSTIVE_HALF_ORDER_CAP {
        return Err(Error::InvalidParameter(format!(
            "exhaustive search needs half order in 1..={EXHAUSTIVE_HALF_ORDER_CAP}, got {n}"
        )));
    }
    max_size_search(connected_labeled_graphs(2 * n), n)
}
