//! Minimum-degree greedy for maximum independent set on chordal and
//! interval graphs.
//!
//! The crate pairs a greedy engine (scripted, random, simplicial-first and
//! exhaustive worst/best-case tie-breaking) with exact solvers, chordal
//! structure tools (lex-BFS, clique trees, leafage) and a move ledger that
//! classifies each greedy pick against a fixed independent set. Instance
//! families with known greedy/optimum gaps live in [`families`].

pub mod chordal;
mod error;
pub mod families;
pub mod graph;
pub mod greedy;
pub mod interval;
pub mod ledger;
pub mod mis;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};

/// Exact rational used for every ratio and interval endpoint.
pub type Rational = num_rational::Ratio<i64>;
