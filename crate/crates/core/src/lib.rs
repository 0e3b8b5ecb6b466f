//! Multipartite Ramsey numbers `m_j(C3, C3|C4, n1K2, ...)`.
//!
//! The crate builds lower-bound colorings of complete multipartite hosts,
//! checks them with exact monochromatic-target detectors, decides small
//! arrowing instances by exhaustive symmetry-pruned search, and evaluates the
//! known closed forms with consistency checks against both.

pub mod cli;
pub mod crosscheck;
pub mod detect;
pub mod dot;
pub mod error;
pub mod formula;
pub mod graph;
pub mod mrc;
pub mod witness;

pub use error::{Error, Result};
pub use graph::{parse_targets, ClassGraph, Coloring, PartStructure, TargetSpec};
pub mod search;

pub use search::{arrows_exhaustive, ArrowInstance, Budget, SearchConfig, SearchOutcome};
