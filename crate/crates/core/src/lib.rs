//! Graphs in which every spanning tree has a perfect matching.
//!
//! A connected graph has no anti-Kekulé set (no edge set whose removal keeps it
//! connected but destroys every perfect matching) exactly when each of its
//! spanning trees has a perfect matching. This crate decides that property with
//! a checkable certificate or a counterexample spanning tree, computes exact
//! anti-Kekulé numbers of small graphs, and checks the extremal edge bound for
//! such graphs.
//!
//! ```
//! use kekule_core::{cycle, complete, recognize};
//!
//! assert!(recognize(&cycle(6).unwrap()).unwrap().is_member());
//! assert!(!recognize(&complete(4).unwrap()).unwrap().is_member());
//! ```

mod dsu;
pub mod antikekule;
pub mod error;
pub mod extremal;
pub mod family;
pub mod graph;
pub mod matching;
pub mod spanning;

pub use antikekule::{anti_kekule_number, is_anti_kekule_set, AkResult, AkValue};
pub use error::{Error, Result};
pub use extremal::{exhaustive_search, extremal_graphs, f, max_size_search, SearchOutcome};
pub use family::{
    pendant_replace, recognize, recognize_oracle, sample_member, sample_pm_tree,
    verify_certificate, Certificate, Recognition, Witness,
};
pub use graph::{
    complete, corona, cycle, edge, encode_graph6, parse_edge_list, parse_graph6, path, Edge,
    Graph, Vertex,
};
pub use matching::{has_perfect_matching, maximum_matching, Matching};
pub use spanning::{lemma23_witness_tree, tree_pm_criterion};
