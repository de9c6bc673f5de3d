//! Exact maximum weight stable set solver for {ISK4,wheel}-free trigraphs.
//!
//! A trigraph leaves some adjacencies undecided; a weight function prices
//! vertices and the undecided pairs. The solver decomposes the input along
//! clique cutsets and stable 2-cutsets, transfers weights onto the shrinking
//! block, and solves the basic pieces (series-parallel, complete bipartite,
//! line) with dedicated routines. A brute-force oracle, instance generators
//! and class validators live in [`testkit`].

pub mod basic;
pub mod decomp;
pub mod error;
pub mod lineroot;
pub mod matching;
pub mod solver;
pub mod testkit;
pub mod text;
pub mod treedec;
pub mod trigraph;
pub mod weight;

pub use error::{Error, Result};
pub use trigraph::{Adjacency, Trigraph, VertexSet};
pub use weight::{WeightFunction, WeightedTrigraph};
