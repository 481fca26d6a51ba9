//! Spanning trees: deterministic construction and exhaustive enumeration,
//! perfect matchings of trees, minimally 2-connected spanning subgraphs, and
//! explicit spanning trees without a perfect matching for 2-connected graphs
//! other than cycles.

use std::collections::VecDeque;

use crate::dsu::RollbackDsu;
use crate::error::{Error, Result};
use crate::graph::{components, edge, is_two_connected, odd_component_count, Edge, Graph, Vertex};
use crate::matching::Matching;

/// Default cap on the number of spanning trees an enumeration may produce.
pub const DEFAULT_TREE_CAP: usize = 1_000_000;

/// Kruskal over edges in index order: the spanning tree that keeps every edge
/// not closing a cycle with lower-indexed edges.
pub fn any_spanning_tree(g: &Graph) -> Result<Graph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut dsu = RollbackDsu::new(g.order());
    let tree = g.edges().into_iter().filter(|&(u, v)| dsu.union(u, v));
    Graph::from_edges(g.order(), tree)
}

fn spans(n: usize, edges: impl Iterator<Item = Edge>) -> bool {
    let mut dsu = RollbackDsu::new(n);
    let mut joined = 1;
    for (u, v) in edges {
        if dsu.union(u, v) {
            joined += 1;
            if joined == n {
                return true;
            }
        }
    }
    joined >= n
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Choice {
    Include,
    Exclude,
}

/// Lazy enumeration of all spanning trees by include/exclude backtracking
/// over edge indices. Each tree is yielded once, as its sorted edge list.
/// Trees are produced in a fixed order: the include branch is explored first.
#[derive(Debug, Clone)]
pub struct SpanningTrees {
    n: usize,
    edges: Vec<Edge>,
    dsu: RollbackDsu,
    choices: Vec<Choice>,
    tree: Vec<Edge>,
    cap: usize,
    yielded: usize,
    backtracking: bool,
    done: bool,
}

pub fn enumerate_spanning_trees(g: &Graph, cap: usize) -> Result<SpanningTrees> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(SpanningTrees {
        n: g.order(),
        edges: g.edges(),
        dsu: RollbackDsu::new(g.order()),
        choices: Vec::new(),
        tree: Vec::new(),
        cap,
        yielded: 0,
        backtracking: false,
        done: false,
    })
}

impl SpanningTrees {
    pub fn yielded(&self) -> usize {
        self.yielded
    }

    /// Can edge `k` be left out while the tree so far plus edges after `k`
    /// still span the graph?
    fn can_exclude(&self, k: usize) -> bool {
        spans(
            self.n,
            self.tree.iter().copied().chain(self.edges[k + 1..].iter().copied()),
        )
    }
}

impl Iterator for SpanningTrees {
    type Item = Result<Vec<Edge>>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        loop {
            if self.backtracking {
                match self.choices.pop() {
                    None => {
                        self.done = true;
                        return None;
                    }
                    Some(Choice::Exclude) => continue,
                    Some(Choice::Include) => {
                        self.dsu.rollback();
                        self.tree.pop();
                        let k = self.choices.len();
                        if self.can_exclude(k) {
                            self.choices.push(Choice::Exclude);
                            self.backtracking = false;
                        }
                    }
                }
                continue;
            }

            if self.tree.len() + 1 == self.n {
                self.backtracking = true;
                if self.yielded == self.cap {
                    self.done = true;
                    return Some(Err(Error::CapExceeded { count: self.yielded }));
                }
                self.yielded += 1;
                return Some(Ok(self.tree.clone()));
            }
            let k = self.choices.len();
            debug_assert!(k < self.edges.len(), "exclusion kept the graph spanning");
            let (u, v) = self.edges[k];
            if self.dsu.find(u) != self.dsu.find(v) {
                self.dsu.union(u, v);
                self.tree.push((u, v));
                self.choices.push(Choice::Include);
            } else {
                // closes a cycle, so leaving it out never disconnects
                self.choices.push(Choice::Exclude);
            }
        }
    }
}

/// Convenience: collect all spanning trees, failing if there are more than `cap`.
pub fn all_spanning_trees(g: &Graph, cap: usize) -> Result<Vec<Vec<Edge>>> {
    enumerate_spanning_trees(g, cap)?.collect()
}

/// The unique perfect matching of a tree, found by repeatedly matching a
/// leaf to its neighbor.
pub fn tree_perfect_matching(t: &Graph) -> Result<Option<Matching>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut leaves: VecDeque<Vertex> = t.vertices().filter(|&v| degree[v] <= 1).collect();
    let mut matched = Vec::with_capacity(n / 2);
    while let Some(v) = leaves.pop_front() {
        if !alive[v] {
            continue;
        }
        let Some(&u) = t.neighbors(v).iter().find(|&&u| alive[u]) else {
            return Ok(None);
        };
        alive[v] = false;
        alive[u] = false;
        matched.push(edge(u, v));
        for &w in t.neighbors(u) {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] <= 1 {
                    leaves.push_back(w);
                }
            }
        }
    }
    if alive.iter().any(|&a| a) {
        return Ok(None);
    }
    Ok(Some(Matching::new(n, matched)?))
}

/// A tree has a perfect matching iff deleting any single vertex leaves
/// exactly one odd component.
pub fn tree_pm_criterion(t: &Graph) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(t.vertices().all(|v| odd_component_count(t, &[v]) == 1))
}

/// Least vertex `v` of a tree with at least three odd components in `t - v`.
pub fn tree_bad_vertex(t: &Graph) -> Option<Vertex> {
    t.vertices().find(|&v| odd_component_count(t, &[v]) >= 3)
}

/// Greedily deletes edges, in ascending order, whose removal keeps the graph
/// 2-connected.
pub fn minimally_2connected_spanning(g: &Graph) -> Result<Graph> {
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    let mut h = g.clone();
    for (u, v) in g.edges() {
        h.remove_edge(u, v);
        if !is_two_connected(&h) {
            h.add_edge(u, v)?;
        }
    }
    Ok(h)
}

pub fn is_minimally_two_connected(g: &Graph) -> bool {
    is_two_connected(g)
        && g.edges().into_iter().all(|(u, v)| {
            let mut h = g.clone();
            h.remove_edge(u, v);
            !is_two_connected(&h)
        })
}

/// Degree-two vertices of a minimally 2-connected graph and the forest left
/// after deleting them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BollobasStructure {
    pub degree_two: Vec<Vertex>,
    /// Vertices of the forest (degree at least three), sorted.
    pub forest_vertices: Vec<Vertex>,
    /// The forest, relabeled: vertex `i` is `forest_vertices[i]`.
    pub forest: Graph,
    /// Forest components, in original labels.
    pub trees: Vec<Vec<Vertex>>,
    /// Path components of the subgraph induced by the degree-two vertices,
    /// each listed from one end to the other.
    pub paths: Vec<Vec<Vertex>>,
}

/// Computes and checks the structure of a minimally 2-connected graph that is
/// not a cycle: deleting the degree-two vertices leaves a forest with at least
/// two trees, the degree-two vertices induce paths, and the two ends of every
/// such path attach to different trees.
pub fn bollobas_structure(h: &Graph) -> Result<BollobasStructure> {
    if !is_minimally_two_connected(h) {
        return Err(Error::NotMinimallyTwoConnected);
    }
    if h.is_cycle() {
        return Err(Error::IsCycle);
    }
    let violation = |msg: String| Err(Error::StructureViolation(msg));

    let degree_two: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) == 2).collect();
    let forest_vertices: Vec<Vertex> = h.vertices().filter(|&v| h.degree(v) != 2).collect();
    let forest = h.induced_subgraph(&forest_vertices);
    let forest_parts = components(&forest);
    if forest.size() + forest_parts.len() != forest.order() {
        return violation("graph minus its degree-two vertices has a cycle".into());
    }
    if forest_parts.len() < 2 {
        return violation(format!(
            "forest has {} component(s), expected at least two",
            forest_parts.len()
        ));
    }
    let trees: Vec<Vec<Vertex>> = forest_parts
        .iter()
        .map(|c| c.iter().map(|&i| forest_vertices[i]).collect())
        .collect();
    let mut tree_of = vec![usize::MAX; h.order()];
    for (t, vs) in trees.iter().enumerate() {
        for &v in vs {
            tree_of[v] = t;
        }
    }

    let sub = h.induced_subgraph(&degree_two);
    let mut paths = Vec::new();
    for comp in components(&sub) {
        if sub.size() > 0 && comp.iter().all(|&i| sub.degree(i) == 2) {
            return violation("degree-two vertices induce a cycle".into());
        }
        // walk from an end
        let start = *comp
            .iter()
            .find(|&&i| sub.degree(i) <= 1)
            .expect("acyclic component has an end");
        let mut walk = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = sub.neighbors(cur).iter().find(|&&w| w != prev) {
            walk.push(next);
            prev = cur;
            cur = next;
        }
        let walk: Vec<Vertex> = walk.into_iter().map(|i| degree_two[i]).collect();

        // the two edges leaving the path, one at each end
        let attachments: Vec<Vertex> = if walk.len() == 1 {
            h.neighbors(walk[0]).to_vec()
        } else {
            [walk[0], walk[walk.len() - 1]]
                .iter()
                .map(|&end| {
                    *h.neighbors(end)
                        .iter()
                        .find(|&&w| h.degree(w) != 2)
                        .expect("path end leaves the path")
                })
                .collect()
        };
        if attachments.iter().any(|&a| h.degree(a) == 2) {
            return violation(format!("path {walk:?} is not attached to the forest"));
        }
        if tree_of[attachments[0]] == tree_of[attachments[1]] {
            return violation(format!(
                "both ends of path {walk:?} attach to the same tree"
            ));
        }
        paths.push(walk);
    }

    Ok(BollobasStructure {
        degree_two,
        forest_vertices,
        forest,
        trees,
        paths,
    })
}

/// A spanning tree without a perfect matching of a 2-connected graph that is
/// not a cycle.
///
/// A minimally 2-connected spanning subgraph `H` decides the construction. If
/// `H` is a cycle it is a Hamilton cycle `v_1 .. v_n`; with the least chord
/// `v_1 v_k` the tree is the cycle minus `v_{k-2} v_{k-1}` and
/// `v_{k+1} v_{k+2}`, plus the chord, so `v_k` carries the two leaves
/// `v_{k-1}` and `v_{k+1}`. Otherwise a forest vertex `v` of forest degree at
/// most one has two degree-two neighbors `u`, `w`; a spanning tree of
/// `H - u - w` plus `vu` and `vw` again hangs two leaves on `v`.
pub fn lemma23_witness_tree(g: &Graph) -> Result<Graph> {
    if !is_two_connected(g) {
        return Err(Error::NotTwoConnected);
    }
    if g.is_cycle() {
        return Err(Error::IsCycle);
    }
    let h = minimally_2connected_spanning(g)?;
    let tree = if h.is_cycle() {
        hamiltonian_chord_tree(g, &h)?
    } else {
        forest_leaf_tree(&h)?
    };
    debug_assert!(tree.is_tree());
    Ok(tree)
}

fn hamiltonian_chord_tree(g: &Graph, cycle: &Graph) -> Result<Graph> {
    let n = g.order();
    let (a, b) = g
        .edges()
        .into_iter()
        .find(|&(u, v)| !cycle.has_edge(u, v))
        .ok_or(Error::IsCycle)?;

    // v_1 = a, walking first towards the smaller cycle neighbor of a
    let mut order = Vec::with_capacity(n);
    let mut prev = usize::MAX;
    let mut cur = a;
    for _ in 0..n {
        order.push(cur);
        let next = *cycle
            .neighbors(cur)
            .iter()
            .find(|&&w| w != prev)
            .expect("cycle vertex has two neighbors");
        prev = cur;
        cur = next;
    }
    // zero-based: v_i is order[i - 1]
    let k = order.iter().position(|&x| x == b).expect("chord end on cycle") + 1;
    debug_assert!((3..n).contains(&k), "chord ends are not cycle neighbors");
    let at = |i: usize| order[(i + n - 1) % n];
    let dropped = [edge(at(k - 2), at(k - 1)), edge(at(k + 1), at(k + 2))];
    if dropped[0] == dropped[1] {
        return Err(Error::StructureViolation(format!(
            "removed cycle edges coincide for n = {n}, k = {k}"
        )));
    }
    let mut tree = cycle.without_edges(&dropped);
    tree.add_edge(a, b)?;
    if !tree.is_tree() {
        return Err(Error::StructureViolation(
            "chord construction did not produce a tree".into(),
        ));
    }
    Ok(tree)
}

fn forest_leaf_tree(h: &Graph) -> Result<Graph> {
    let s = bollobas_structure(h)?;
    let v = s
        .forest_vertices
        .iter()
        .enumerate()
        .find(|&(i, _)| s.forest.degree(i) <= 1)
        .map(|(_, &v)| v)
        .ok_or_else(|| Error::StructureViolation("forest has no vertex of degree <= 1".into()))?;
    let mut outside = h.neighbors(v).iter().copied().filter(|&x| h.degree(x) == 2);
    let (Some(u), Some(w)) = (outside.next(), outside.next()) else {
        return Err(Error::StructureViolation(format!(
            "vertex {v} has fewer than two degree-two neighbors"
        )));
    };
    let (rest, map) = h.remove_vertices(&[u, w]);
    let rest_tree = any_spanning_tree(&rest).map_err(|_| {
        Error::StructureViolation(format!("H - {u} - {w} is disconnected"))
    })?;
    let mut tree = Graph::new(h.order());
    for (x, y) in rest_tree.edges() {
        tree.add_edge(map[x], map[y])?;
    }
    tree.add_edge(v, u)?;
    tree.add_edge(v, w)?;
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, star};

    fn diamond() -> Graph {
        let mut g = cycle(4).unwrap();
        g.add_edge(0, 2).unwrap();
        g
    }

    fn theta() -> Graph {
        // branch vertices 0 and 1, paths 0-2-1, 0-3-1, 0-4-1
        Graph::from_edges(5, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)]).unwrap()
    }

    #[test]
    fn any_tree_examples() {
        assert_eq!(any_spanning_tree(&cycle(4).unwrap()).unwrap().edges(), vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!(any_spanning_tree(&complete(2).unwrap()).unwrap(), complete(2).unwrap());
        let t = any_spanning_tree(&complete(3).unwrap()).unwrap();
        assert_eq!(t.edges(), vec![(0, 1), (0, 2)]);
        assert!(matches!(any_spanning_tree(&Graph::new(2)), Err(Error::Disconnected)));
    }

    #[test]
    fn enumeration_counts() {
        let count = |g: &Graph| all_spanning_trees(g, DEFAULT_TREE_CAP).unwrap().len();
        assert_eq!(count(&complete(3).unwrap()), 3);
        assert_eq!(count(&complete(4).unwrap()), 16);
        assert_eq!(count(&cycle(4).unwrap()), 4);
        assert_eq!(count(&cycle(6).unwrap()), 6);
        assert_eq!(count(&complete(6).unwrap()), 1296);
        assert_eq!(count(&complete_bipartite(2, 3).unwrap()), 12);
        assert_eq!(count(&Graph::new(1)), 1);
    }

    #[test]
    fn enumeration_is_distinct_and_valid() {
        let g = complete(5).unwrap();
        let trees = all_spanning_trees(&g, DEFAULT_TREE_CAP).unwrap();
        let mut sorted = trees.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), trees.len());
        for t in trees {
            assert!(g.spanning_subgraph(&t).unwrap().is_tree());
        }
    }

    #[test]
    fn enumeration_cap() {
        let g = complete(4).unwrap();
        let mut it = enumerate_spanning_trees(&g, 5).unwrap();
        for _ in 0..5 {
            assert!(it.next().unwrap().is_ok());
        }
        assert_eq!(it.next(), Some(Err(Error::CapExceeded { count: 5 })));
        assert_eq!(it.next(), None);
        assert_eq!(all_spanning_trees(&g, 16).unwrap().len(), 16);
        assert!(matches!(
            enumerate_spanning_trees(&Graph::new(3), 10),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn tree_matching_examples() {
        let m = tree_perfect_matching(&path(4).unwrap()).unwrap().unwrap();
        assert_eq!(m.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(tree_perfect_matching(&path(3).unwrap()).unwrap(), None);
        assert_eq!(tree_perfect_matching(&star(3).unwrap()).unwrap(), None);
        assert_eq!(tree_perfect_matching(&Graph::new(1)).unwrap(), None);
        assert_eq!(tree_perfect_matching(&cycle(4).unwrap()), Err(Error::NotATree));
    }

    #[test]
    fn tree_criterion_examples() {
        assert!(tree_pm_criterion(&path(2).unwrap()).unwrap());
        assert!(tree_pm_criterion(&path(4).unwrap()).unwrap());
        assert!(!tree_pm_criterion(&star(3).unwrap()).unwrap());
        assert_eq!(tree_bad_vertex(&star(3).unwrap()), Some(0));
        assert_eq!(tree_pm_criterion(&cycle(3).unwrap()), Err(Error::NotATree));
    }

    #[test]
    fn minimally_two_connected_examples() {
        let h = minimally_2connected_spanning(&complete(4).unwrap()).unwrap();
        assert!(h.is_cycle() && h.order() == 4);
        let c6 = cycle(6).unwrap();
        assert_eq!(minimally_2connected_spanning(&c6).unwrap(), c6);
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(minimally_2connected_spanning(&k23).unwrap(), k23);
        assert_eq!(
            minimally_2connected_spanning(&path(3).unwrap()),
            Err(Error::NotTwoConnected)
        );
    }

    #[test]
    fn bollobas_examples() {
        let s = bollobas_structure(&complete_bipartite(2, 3).unwrap()).unwrap();
        assert_eq!(s.degree_two, vec![2, 3, 4]);
        assert_eq!(s.forest_vertices, vec![0, 1]);
        assert_eq!(s.trees, vec![vec![0], vec![1]]);
        assert_eq!(s.paths.len(), 3);

        let s = bollobas_structure(&theta()).unwrap();
        assert_eq!(s.forest_vertices, vec![0, 1]);
        assert_eq!(s.forest.size(), 0);

        assert_eq!(bollobas_structure(&cycle(5).unwrap()), Err(Error::IsCycle));
        assert_eq!(
            bollobas_structure(&complete(4).unwrap()),
            Err(Error::NotMinimallyTwoConnected)
        );
    }

    #[test]
    fn witness_tree_diamond() {
        let t = lemma23_witness_tree(&diamond()).unwrap();
        // star centered at vertex 2, a chord end
        assert_eq!(t, Graph::from_edges(4, [(0, 2), (1, 2), (2, 3)]).unwrap());
        assert!(!tree_pm_criterion(&t).unwrap());
    }

    #[test]
    fn witness_tree_examples() {
        for g in [complete(4).unwrap(), complete_bipartite(2, 3).unwrap(), theta(), complete(6).unwrap()] {
            let t = lemma23_witness_tree(&g).unwrap();
            assert!(t.is_tree());
            assert!(t.edges().iter().all(|&(u, v)| g.has_edge(u, v)));
            assert!(!tree_pm_criterion(&t).unwrap());
            let bad = tree_bad_vertex(&t);
            assert!(bad.is_some() || t.order() % 2 == 1);
        }
        assert_eq!(lemma23_witness_tree(&cycle(6).unwrap()), Err(Error::IsCycle));
        assert_eq!(lemma23_witness_tree(&path(4).unwrap()), Err(Error::NotTwoConnected));
    }
}
