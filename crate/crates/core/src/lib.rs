//! Odd list-coloring of graphs on surfaces of small Euler genus.
//!
//! The crate bundles exact solvers for proper, odd and relaxed-odd list
//! colorings, a checker for the R-length cycle hypotheses, combinatorial
//! embeddings with face tracing, structural audits of minimal-counterexample
//! configurations, and an exact discharging ledger.

pub mod audit;
pub mod catalog;
pub mod coloring;
pub mod discharge;
pub mod embedding;
pub mod generate;
pub mod graph;
pub mod io;
pub mod reduction;

pub use graph::{Cycle, EdgeId, Graph, GraphError, RSet, Vertex};
