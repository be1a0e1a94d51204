//! Exact rainbow-connection workbench for small graphs.
//!
//! The crate computes rainbow connection numbers `rc(G)` and rainbow vertex
//! connection numbers `rvc(G)` exactly, enumerates connected graphs and free
//! trees up to isomorphism, determines the minimal sizes `e2(n)` (fewest
//! edges of an order-`n` graph with `rc = 2`) and `eprime(n, d)` (fewest
//! edges with `rvc = d`) at desk scale, builds certified extremal families,
//! and evaluates the closed-form bounds that sandwich `e2(n) / (n log2 n)`
//! around 1.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod canon;
pub mod coloring;
pub mod constructions;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod multiplicity;
pub mod search;
pub mod solver;

pub use canon::{canonical_form, canonical_graph, CanonicalForm};
pub use coloring::{ColoringError, EdgeColoring, VertexColoring};
pub use graph::{DegreeProfile, Graph, GraphError};
pub use solver::{
    rc2_decide, rc_exact, rc_leq, rvc_exact, rvc_leq, verify_rc_coloring, verify_rvc_coloring,
    RcWitness, RvcWitness, SolverError,
};
