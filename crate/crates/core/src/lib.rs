//! Graph-theoretic analysis of untwisted outer automorphism groups of
//! right-angled Artin groups: support graphs, SIL-pairs, the Theta graph,
//! the finite-index test, and constructions of defining graphs whose pure
//! symmetric outer automorphism group is a prescribed RAAG.

pub mod analysis;
pub mod census;
pub mod construct;
pub mod error;
pub mod format;
pub mod graph;
pub mod graph6;
pub mod perm;
mod search;
pub mod symmetry;
pub mod verify;

pub use analysis::{analyze, AnalysisReport, BigCount};
pub use error::{Error, Result};
pub use graph::{Graph, GraphBuilder, VertexSet};
pub use graph6::{parse_graph6, write_graph6};
pub use perm::Permutation;
