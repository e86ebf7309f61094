//! Symmetry breaking in small graphs.
//!
//! Exact computation of distinguishing numbers `D(G)` and distinguishing
//! indices `D'(G)`, line graphs and line-graph recognition, graphoidal covers
//! and their intersection graphs, plus exhaustive scans that check the
//! known relations between these quantities on all small graphs.
//!
//! Graphs have at most 64 vertices and are stored as adjacency bitmasks; the
//! searches are exponential and meant for small orders.

pub mod automorphism;
pub mod corpus;
pub mod distinguishing;
pub mod error;
pub mod graph;
pub mod graphoidal;
pub mod harness;
pub mod linegraph;

pub use automorphism::{automorphisms, AutomorphismGroup, Permutation};
pub use distinguishing::{distinguishing_index, distinguishing_number};
pub use error::{Error, Result};
pub use graph::{encode_graph6, parse_graph6, EdgeLabeling, Graph, VertexLabeling};
pub use graphoidal::{GraphoidalCover, GraphoidalPath};
