//! Zero forcing and adjacency spectral radius on clique trees.
//!
//! A clique tree is a connected graph whose blocks are all complete. Among
//! clique trees on `n` vertices with blocks of size at least 3 and zero
//! forcing number `k`, the graph `K_{2k−n+2}` with `n−k−1` triangles glued at
//! one vertex has the largest spectral radius. This crate builds the objects
//! involved and checks that claim exhaustively for small `n`.
//!
//! - [`graph_core`]: graphs, block decomposition, clique-tree recipes, canonical keys.
//! - [`zero_forcing`]: color-change closure, exact `Z(G)`, block formula.
//! - [`spectral`]: Perron pairs, quotient matrices, extremal cubic and bounds.
//! - [`transforms`]: spectral-radius-raising surgeries and the reduction driver.
//! - [`enumeration`]: clique trees up to isomorphism and the verification harness.
//! - [`suites`]: seeded randomized checks of the transform and Perron lemmas.

pub mod enumeration;
pub mod error;
pub mod graph_core;
pub mod random;
pub mod spectral;
pub mod suites;
pub mod transforms;
pub mod zero_forcing;

pub use error::{Error, Result};
pub use graph_core::Graph;
