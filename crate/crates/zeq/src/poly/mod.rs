//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! A fixed fourteen-variable alphabet covers all quantities used by the
//! generalized characteristic polynomials and zeta functions: sparse
//! polynomials with graded-lex ordering, fraction-free determinants,
//! adjugates, modular fingerprints, and truncated x-series.

pub mod adjugate;
pub mod fingerprint;
pub mod matrix;
pub mod monomial;
pub mod multipoly;
pub mod series;
pub mod var;

pub use adjugate::{adjugate_char_matrix, char_matrix};
pub use fingerprint::{combine, eval_points, fingerprint, PRIME};
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use multipoly::{rat, rat_pow, ratio, MultiPoly, Rat};
pub use series::{det_series_identity_minus_x, XSeries};
pub use var::{Var, NVARS};
