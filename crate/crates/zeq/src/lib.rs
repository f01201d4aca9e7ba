//! Exact zeta functions and generalized characteristic polynomials for digraphs.
//!
//! Everything is computed over the rational numbers with no floating point:
//! the five-variable polynomial eta and its graph and completed variants,
//! edge zeta functions with per-arc direction weights and their closed forms,
//! invasion (edge subdivision by a two-boundary gadget), abelian switching
//! with exact conjugacy certificates, and exhaustive mining of zeta-equivalent
//! digraph and graph pairs.

pub mod charpoly;
pub mod graph;
pub mod invasion;
pub mod known;
pub mod poly;
pub mod random;
pub mod search;
pub mod switching;
pub mod zeta;

pub use graph::{Digraph, WeightedDigraph};
pub use poly::{MultiPoly, PolyMatrix, Rat, Var};
