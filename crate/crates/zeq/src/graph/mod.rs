//! Digraph data model: multiplicity matrices, weights, permutations,
//! canonical forms, and the edge-list text format.

pub mod canon;
pub mod digraph;
pub mod format;
pub mod perm;
pub mod weighted;

pub use canon::{canonical_form, iso_check, MAX_CANON_N};
pub use digraph::{Digraph, GraphError};
pub use format::{
    parse_digraph, parse_document, parse_weighted, print_digraph, print_weighted, Document,
    FormatError,
};
pub use perm::{for_each_perm, Perm};
pub use weighted::{WeightedDigraph, WeightedViews};
