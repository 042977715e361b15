//! Graph data model: validated connected simple graphs, their canonical
//! directed-edge layout, associated matrices, and structural invariants.

mod digraph;
mod info;
mod matrices;

pub use digraph::{build_digraph, Digraph, GraphError};
pub use info::{laplacian_cofactor, GraphInfo};
pub use matrices::GraphMatrices;
