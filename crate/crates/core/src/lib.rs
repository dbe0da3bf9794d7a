//! Replacement products, semidirect-product Cayley graphs, and exact
//! computation of edge-connectivity λ, vertex-connectivity κ and
//! restricted edge-connectivity λ′ with checkable cut certificates.

pub mod connectivity;
pub mod families;
pub mod flow;
pub mod group;
pub mod replacement;
pub mod verify;
pub mod graph;

pub use graph::{make_graph, Edge, Graph, GraphError};
