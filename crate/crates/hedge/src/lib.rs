//! Exact solvers for elimination distance and treewidth measured relative
//! to a hereditary graph class, for classes given either as "bipartite" or
//! by finitely many forbidden induced subgraphs.
//!
//! The value of interest generalizes treedepth and treewidth: instead of
//! eliminating down to the empty graph, elimination stops once every
//! component lies in the target class. Both parameters are certified by a
//! deletion set whose torso has small treedepth or treewidth; see
//! [`witness`] for the solvers and [`width`] for the classical measures.
//! Everything is exact and exhaustively cross-checked against brute-force
//! oracles, so vertex counts are capped throughout.

pub mod cli;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod oct;
pub mod oracle;
pub mod set;
pub mod width;
pub mod witness;
