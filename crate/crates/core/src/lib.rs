//! Feedback vertex set on graphs given with a branch decomposition of
//! bounded mim-width.
//!
//! The solver computes a maximum (or maximum-weight) induced forest by
//! dynamic programming over the decomposition; a minimum feedback vertex
//! set is its complement. Builders turn tree decompositions, clique-width
//! expressions, leaf powers and interval models into decompositions, and
//! [`oracle`] holds brute-force reference solvers used for checking.

#![forbid(unsafe_code)]

pub mod bitset;
pub mod builders;
pub mod dp;
pub mod branchdec;
pub mod error;
pub mod forest;
pub mod graph;
pub mod mvc;
pub mod oracle;
pub mod par;

pub use bitset::VertexSet;
pub use branchdec::BranchDecomposition;
pub use error::{Error, Result};
pub use graph::Graph;
