//! Exact computation of the Bartholdi zeta function of a connected simple
//! graph, its functional equations, and its pole structure.
//!
//! The zeta function is computed two independent ways (a determinant over
//! directed edges and a determinant over vertices), every identity relating
//! them is machine-verified in exact rational arithmetic, and a brute-force
//! cycle-enumeration oracle cross-checks the series expansion.

pub mod algebra;
pub mod corpus;
pub mod graph;
pub mod oracle;
pub mod poles;
pub mod zeta;
