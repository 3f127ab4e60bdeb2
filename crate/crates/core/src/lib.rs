//! Graph products and exact domination solvers.
//!
//! The crate computes the domination number `γ`, the total domination
//! number `γ_t` and the outer-connected domination number `γ̃c` of small
//! graphs, together with canonical (lexicographically least) minimum
//! witnesses. On top of that it builds lexicographic, Cartesian, corona and
//! direct products, emits the closed-form constructions known for
//! outer-connected domination in those products, and checks every such
//! identity and bound against exact values.

pub mod checks;
pub mod combinations;
pub mod corpus;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod products;
pub mod scan;
pub mod solvers;
pub mod witness;

pub use graph::{Graph, GraphError, GraphJson, Mask, VertexSet, MAX_ORDER};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use products::{ProductInstance, ProductKind};
pub use solvers::{Certificate, DominationKind, SolveError, SolverKind};
