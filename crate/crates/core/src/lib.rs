//! Exact edge cover polynomials of small simple graphs.
//!
//! An *edge cover* of a graph is a set of edges that touches every vertex.
//! Writing `e(G, i)` for the number of edge covers of size `i`, the edge
//! cover polynomial is `E(G, x) = sum_i e(G, i) x^i`. This crate computes
//! these polynomials exactly (arbitrary-precision coefficients) with three
//! independent engines, checks the closed-form identities that relate the
//! coefficients to degree data, and runs an isomorphism-free census of
//! cubic graphs by their polynomials.
//!
//! Scope is deliberately small-graph: orders up to 62 for I/O, up to 28
//! for the counting engines, up to 16 for canonical labeling.

#![forbid(unsafe_code)]

pub mod canon;
pub mod census;
pub mod engines;
pub mod graph;
pub mod graph6;
pub mod identities;
mod par;
pub mod poly;

pub use canon::{canonical_code, CanonicalCode};
pub use census::{
    census_report, generate_cubic, partition_by_polynomial, CensusReport, EquivClass,
};
pub use engines::{
    count_covers_brute, count_covers_dp, count_covers_ie, edge_cover_polynomial,
    enumerate_minimum_covers, CoverTable, Engine,
};
pub use graph::{DegreeStats, Graph, GraphError};
pub use poly::{binomial, EcPolynomial};
