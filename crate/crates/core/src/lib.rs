//! Exact total dominator colouring of middle graphs.
//!
//! The crate builds middle and line graphs with provenance, solves
//! `χ_d^t`, `χ`, `χ'`, `γ_t` and `α` exactly on small instances, and checks
//! the known bounds and closed forms for middle graphs against the exact
//! answers.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod bounds;
pub mod campaign;
pub mod cli;
pub mod error;
pub mod families;
pub mod graph;
pub mod middle;
pub mod solve;

pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, VertexId};
pub use middle::{line_graph, middle_graph, LineGraph, MiddleGraph, MiddleVertexLabel};
