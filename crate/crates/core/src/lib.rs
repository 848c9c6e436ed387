//! Graceful and strongly graceful labellings of trees.
//!
//! The crate covers the tree structures involved (matchings, spines, spike
//! trees and contrees), labellings and the label permutations that preserve
//! strong gracefulness, the constructive labeller for lobsters whose end
//! edges form a perfect matching, and exhaustive search over small trees.

pub mod dot;
pub mod equivalence;
pub mod labelling;
pub mod lobster;
pub mod search;
pub mod tree;

pub use dot::to_dot;
pub use labelling::{
    anchored_quad_from, extract_anchor_path, is_generalized_strong_perm, is_graceful, is_graceful_perm,
    is_strongly_graceful, AnchorPath, LabelError, LabelPermutation, Labelling, StrongQuad,
};
pub use tree::{
    canonical_form, contract_matching, diameter, end_edge_perfect_matching, is_k_distant, longest_path, make_spine,
    parse_tree, perfect_matching, spike, Edge, Matching, Spine, SpineError, Tree, TreeError, Vertex,
};
