//! Exact combinatorics of k-dominating independent sets (k-DISes).
//!
//! A k-DIS of a graph is an independent set `D` such that every vertex
//! outside `D` has at least `k` neighbors inside `D`; for `k = 1` these are
//! exactly the maximal independent sets. This crate provides:
//!
//! - bit-packed graphs with graph6 and edge-list interchange ([`graph`]);
//! - decision, enumeration and counting of k-DISes with an independent
//!   brute-force oracle ([`search`]);
//! - a near-linear solver for the unique k-DIS of a forest ([`tree`]);
//! - parametric graph families, products and a generator expression
//!   language ([`generators`]);
//! - projective planes PG(2,q), their incidence graphs, regular hyperovals
//!   and the skew-line construction of 2-DISes ([`geometry`]);
//! - the correspondence between k-DISes of (K₃)^k and ternary MDS codes of
//!   minimum distance 2 ([`codes`]);
//! - exhaustive extremal search over all labeled graphs and trees of small
//!   order, growth-rate constants, and random-graph expectations
//!   ([`extremal`]).

pub mod codes;
pub mod extremal;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod search;
pub mod tree;

pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use search::{count_kdis, enumerate_kdis, is_kdis, SearchError};
