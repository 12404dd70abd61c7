//! 3-path isolation in graphs.
//!
//! A set `D` of vertices is P3-isolating when `G - N[D]` has maximum degree
//! at most 1. This crate computes the smallest such sets exactly, builds the
//! extremal and exceptional graphs, isolates every eligible subcubic graph
//! with at most `n / 4` vertices, and enumerates small subcubic graphs to
//! check the bound exhaustively.

pub mod constructive;
pub mod enumerate;
pub mod generators;
pub mod graph;
pub mod io;
pub mod par;
pub mod patterns;
pub mod solver;
pub mod verify;

pub use constructive::{
    isolate_p3_subcubic, verify_certificate, CaseId, CaseTrace, ConstructiveError,
};
pub use generators::{catalog, construction_b, CatalogEntry, CatalogId};
pub use graph::{ComponentPartition, Graph, GraphError, VertexSet};
pub use io::{emit_graph6, parse_edge_list, parse_graph6};
pub use par::Execution;
pub use patterns::{
    catalog_match, contains_copy, has_induced_cycle, is_isomorphic, IsolationFamily,
};
pub use solver::{is_isolating, isolation_number, isolation_number_additive, Certificate};
