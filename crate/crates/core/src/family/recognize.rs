//! Deciding whether every spanning tree of a connected graph has a perfect
//! matching.
//!
//! The recursion works on the block structure:
//! 1. odd order, or no perfect matching: any spanning tree refutes;
//! 2. nonseparable: only K2 and even cycles qualify, other 2-connected graphs
//!    get an explicit bad tree from [`lemma23_witness_tree`];
//! 3. a cut vertex `v` with a group of components of odd total order at least
//!    three: split into that side plus `v`, and the rest plus a virtual leaf on
//!    `v`, and recurse on both;
//! 4. otherwise every cut vertex carries exactly one leaf and one further
//!    component, and the graph qualifies iff it is a corona of a connected host.

use serde::Serialize;

use super::certificate::{Certificate, Witness, VIRTUAL_VERTEX_BASE};
use crate::error::{Error, Result};
use crate::graph::{components_avoiding, cut_vertices, edge, is_nonseparable, Edge, Graph, Vertex};
use crate::matching::has_perfect_matching;
use crate::spanning::{
    any_spanning_tree, enumerate_spanning_trees, lemma23_witness_tree, tree_pm_criterion,
    DEFAULT_TREE_CAP,
};

/// Outcome of [`recognize`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Recognition {
    /// Every spanning tree has a perfect matching.
    Member(Certificate),
    /// Some spanning tree has none.
    NonMember(Witness),
}

impl Recognition {
    pub fn is_member(&self) -> bool {
        matches!(self, Recognition::Member(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Recognition::Member(c) => Some(c),
            Recognition::NonMember(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Recognition::Member(_) => None,
            Recognition::NonMember(w) => Some(w),
        }
    }
}

/// A split of a connected graph at a cut vertex into two connected sides
/// sharing only that vertex. The right side has even order at least four.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub cut_vertex: Vertex,
    /// Sorted vertices of the left side, including the cut vertex.
    pub left: Vec<Vertex>,
    /// Sorted vertices of the right side, including the cut vertex.
    pub right: Vec<Vertex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Separation {
    /// The right side as an induced subgraph; vertex `i` is `self.right[i]`.
    pub fn right_part(&self, g: &Graph) -> Graph {
        g.induced_subgraph(&self.right)
    }

    /// The left side plus a new leaf on the cut vertex. Vertex `i < left.len()`
    /// is `self.left[i]`; the leaf is the last vertex.
    pub fn left_part(&self, g: &Graph) -> Graph {
        let mut h = g.induced_subgraph(&self.left);
        let leaf = h.add_vertex();
        let at = self.left.binary_search(&self.cut_vertex).expect("cut vertex on left");
        h.add_edge(at, leaf).expect("fresh leaf");
        h
    }
}

/// Picks the separation used by the recursion: the least cut vertex admitting
/// a proper group of components of `g - v` with odd total order at least
/// three. Groups are tried as (a) the only odd component, when it has at least
/// three vertices, (b) the single odd singleton plus the smallest even
/// component, (c) the three smallest singletons.
pub fn find_separation(g: &Graph) -> Option<Separation> {
    for v in cut_vertices(g) {
        let mut removed = vec![false; g.order()];
        removed[v] = true;
        let comps = components_avoiding(g, &removed);
        let odd: Vec<usize> = (0..comps.len()).filter(|&i| comps[i].len() % 2 == 1).collect();
        let smallest = |filter: &dyn Fn(&Vec<Vertex>) -> bool| {
            let mut idx: Vec<usize> = (0..comps.len()).filter(|&i| filter(&comps[i])).collect();
            idx.sort_by(|&a, &b| (comps[a].len(), &comps[a]).cmp(&(comps[b].len(), &comps[b])));
            idx
        };

        let mut group: Option<Vec<usize>> = None;
        if odd.len() == 1 && comps[odd[0]].len() >= 3 {
            group = Some(vec![odd[0]]);
        } else if odd.len() == 1 {
            if let Some(&even) = smallest(&|c| c.len() % 2 == 0).first() {
                group = Some(vec![odd[0], even]);
            }
        } else {
            let singles = smallest(&|c| c.len() == 1);
            if singles.len() >= 3 {
                group = Some(singles[..3].to_vec());
            }
        }
        let Some(group) = group.filter(|grp| grp.len() < comps.len()) else {
            continue;
        };

        let mut right: Vec<Vertex> = vec![v];
        let mut in_group = vec![false; comps.len()];
        for &i in &group {
            in_group[i] = true;
            right.extend(&comps[i]);
        }
        right.sort_unstable();
        let mut left: Vec<Vertex> = vec![v];
        for (i, c) in comps.iter().enumerate() {
            if !in_group[i] {
                left.extend(c);
            }
        }
        left.sort_unstable();
        return Some(Separation {
            cut_vertex: v,
            left,
            right,
        });
    }
    None
}

/// Tree edges (parent labels) for a bad tree of one side of a separation.
fn lift_tree(g: &Graph, sep: &Separation, side: Side, part_tree: &[Edge]) -> Result<Vec<Edge>> {
    let mut tree = Vec::with_capacity(g.order().saturating_sub(1));
    match side {
        Side::Right => {
            tree.extend(part_tree.iter().map(|&(a, b)| edge(sep.right[a], sep.right[b])));
            let rest = any_spanning_tree(&g.induced_subgraph(&sep.left))?;
            tree.extend(rest.edges().into_iter().map(|(a, b)| edge(sep.left[a], sep.left[b])));
        }
        Side::Left => {
            let leaf = sep.left.len();
            tree.extend(
                part_tree
                    .iter()
                    .filter(|&&(a, b)| a != leaf && b != leaf)
                    .map(|&(a, b)| edge(sep.left[a], sep.left[b])),
            );
            let rest = any_spanning_tree(&sep.right_part(g))?;
            tree.extend(rest.edges().into_iter().map(|(a, b)| edge(sep.right[a], sep.right[b])));
        }
    }
    tree.sort_unstable();
    Ok(tree)
}

/// Turns a bad spanning tree of one side of `sep` into one of the whole graph:
/// the bad tree (minus the virtual leaf, on the left) joined at the cut vertex
/// with any spanning tree of the other side.
pub fn lift_witness(g: &Graph, sep: &Separation, side: Side, part: &Witness) -> Result<Witness> {
    let part_graph = match side {
        Side::Left => sep.left_part(g),
        Side::Right => sep.right_part(g),
    };
    part.verify(&part_graph)?;
    let tree = lift_tree(g, sep, side, &part.tree)?;
    Witness::from_tree(g, tree)
}

enum Outcome {
    Member(Certificate),
    /// Bad spanning tree, in local labels.
    NonMember(Vec<Edge>),
}

struct Recognizer {
    next_virtual: Vertex,
}

impl Recognizer {
    fn decide(&mut self, g: &Graph, labels: &[Vertex]) -> Result<Outcome> {
        let n = g.order();
        if n % 2 == 1 || !has_perfect_matching(g) {
            return Ok(Outcome::NonMember(any_spanning_tree(g)?.edges()));
        }
        if is_nonseparable(g) {
            if n == 2 {
                return Ok(Outcome::Member(Certificate::BaseEdge {
                    u: labels[0],
                    v: labels[1],
                }));
            }
            if g.is_cycle() {
                let cycle = cyclic_order(g).into_iter().map(|v| labels[v]).collect();
                return Ok(Outcome::Member(Certificate::BaseCycle { cycle }));
            }
            return Ok(Outcome::NonMember(lemma23_witness_tree(g)?.edges()));
        }
        if let Some(sep) = find_separation(g) {
            return self.split(g, labels, &sep);
        }
        self.corona(g, labels)
    }

    fn split(&mut self, g: &Graph, labels: &[Vertex], sep: &Separation) -> Result<Outcome> {
        let n = g.order();
        let right = sep.right_part(g);
        let left = sep.left_part(g);
        if right.order() >= n || left.order() >= n || right.order() % 2 == 1 || right.order() < 4 {
            return Err(Error::StructureViolation(format!(
                "separation at {} does not shrink the graph",
                sep.cut_vertex
            )));
        }

        let right_labels: Vec<Vertex> = sep.right.iter().map(|&v| labels[v]).collect();
        let right_cert = match self.decide(&right, &right_labels)? {
            Outcome::Member(c) => c,
            Outcome::NonMember(t) => return Ok(Outcome::NonMember(lift_tree(g, sep, Side::Right, &t)?)),
        };

        let pendant = self.next_virtual;
        self.next_virtual += 1;
        let mut left_labels: Vec<Vertex> = sep.left.iter().map(|&v| labels[v]).collect();
        left_labels.push(pendant);
        let left_cert = match self.decide(&left, &left_labels)? {
            Outcome::Member(c) => c,
            Outcome::NonMember(t) => return Ok(Outcome::NonMember(lift_tree(g, sep, Side::Left, &t)?)),
        };
        Ok(Outcome::Member(Certificate::Glue {
            attach: labels[sep.cut_vertex],
            pendant,
            left: Box::new(left_cert),
            right: Box::new(right_cert),
        }))
    }

    fn corona(&mut self, g: &Graph, labels: &[Vertex]) -> Result<Outcome> {
        let is_leaf = |v: Vertex| g.degree(v) == 1;
        let hosts: Vec<Vertex> = g.vertices().filter(|&v| !is_leaf(v)).collect();
        let leaves = g.order() - hosts.len();
        let one_leaf_each = hosts
            .iter()
            .all(|&h| g.neighbors(h).iter().filter(|&&w| is_leaf(w)).count() == 1);
        let host_graph = g.induced_subgraph(&hosts);
        if leaves == hosts.len() && one_leaf_each && host_graph.order() >= 2 && host_graph.is_connected() {
            let host_edges = host_graph
                .edges()
                .into_iter()
                .map(|(a, b)| edge(labels[hosts[a]], labels[hosts[b]]))
                .collect();
            let pendants = hosts
                .iter()
                .map(|&h| {
                    let leaf = *g.neighbors(h).iter().find(|&&w| is_leaf(w)).expect("one leaf");
                    (labels[h], labels[leaf])
                })
                .collect();
            return Ok(Outcome::Member(Certificate::Corona {
                hosts: hosts.iter().map(|&h| labels[h]).collect(),
                host_edges,
                pendants,
            }));
        }

        // A vertex v with a leaf u and a neighbor w that is neither a leaf nor
        // a cut vertex: some spanning tree hangs both u and w on v.
        let cuts = cut_vertices(g);
        for v in g.vertices() {
            let Some(&u) = g.neighbors(v).iter().find(|&&x| is_leaf(x)) else {
                continue;
            };
            let w = g
                .neighbors(v)
                .iter()
                .copied()
                .find(|&w| w != u && !is_leaf(w) && cuts.binary_search(&w).is_err());
            if let Some(w) = w {
                let (rest, map) = g.remove_vertices(&[u, w]);
                let mut tree: Vec<Edge> = any_spanning_tree(&rest)?
                    .edges()
                    .into_iter()
                    .map(|(a, b)| edge(map[a], map[b]))
                    .collect();
                tree.push(edge(v, u));
                tree.push(edge(v, w));
                return Ok(Outcome::NonMember(tree));
            }
        }

        for tree in enumerate_spanning_trees(g, DEFAULT_TREE_CAP)? {
            let tree = tree?;
            if !tree_pm_criterion(&g.spanning_subgraph(&tree)?)? {
                return Ok(Outcome::NonMember(tree));
            }
        }
        Err(Error::StructureViolation(
            "corona test failed but every spanning tree has a perfect matching".into(),
        ))
    }
}

/// Vertices of a cycle graph in cyclic order from 0, towards its smaller neighbor.
fn cyclic_order(g: &Graph) -> Vec<Vertex> {
    let mut order = Vec::with_capacity(g.order());
    let (mut prev, mut cur) = (usize::MAX, 0);
    for _ in 0..g.order() {
        order.push(cur);
        let next = *g.neighbors(cur).iter().find(|&&w| w != prev).expect("2-regular");
        prev = cur;
        cur = next;
    }
    order
}

/// Decides whether every spanning tree of the connected graph `g` has a
/// perfect matching, returning a construction certificate if so and a bad
/// spanning tree otherwise.
pub fn recognize(g: &Graph) -> Result<Recognition> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let labels: Vec<Vertex> = g.vertices().collect();
    let mut r = Recognizer {
        next_virtual: VIRTUAL_VERTEX_BASE,
    };
    Ok(match r.decide(g, &labels)? {
        Outcome::Member(c) => Recognition::Member(c),
        Outcome::NonMember(tree) => Recognition::NonMember(Witness::from_tree(g, tree)?),
    })
}

/// Brute force: checks every spanning tree (up to `cap` of them) for a
/// perfect matching, stopping at the first failure.
pub fn recognize_oracle(g: &Graph, cap: usize) -> Result<bool> {
    for tree in enumerate_spanning_trees(g, cap)? {
        let t = Graph::from_edges(g.order(), tree?)?;
        if !tree_pm_criterion(&t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether some cut vertex admits any proper group of components with odd
/// total order at least three, by subset enumeration.
pub fn admits_separation(g: &Graph) -> bool {
    cut_vertices(g).into_iter().any(|v| {
        let mut removed = vec![false; g.order()];
        removed[v] = true;
        let sizes: Vec<usize> = components_avoiding(g, &removed).iter().map(Vec::len).collect();
        let k = sizes.len();
        (1..(1u64 << k) - 1).any(|mask| {
            let total: usize = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| sizes[i]).sum();
            total % 2 == 1 && total >= 3
        })
    })
}

/// Whether every cut vertex leaves exactly two components, one of them a
/// single vertex.
pub fn every_cut_vertex_has_single_leaf(g: &Graph) -> bool {
    cut_vertices(g).into_iter().all(|v| {
        let mut removed = vec![false; g.order()];
        removed[v] = true;
        let comps = components_avoiding(g, &removed);
        comps.len() == 2 && comps.iter().any(|c| c.len() == 1)
    })
}
