//! k-interchange neighborhoods over permutations.
//!
//! The crate builds the operational digraphs induced by contiguous-window
//! interchanges (plain move graphs, strict-improvement and weak-improvement
//! digraphs), analyzes their level and reachability structure, and runs
//! forward / aside / backward local search with an adaptive window size.
//!
//! Module map:
//! - [`perm`]: permutations, window moves, neighborhoods, lex ranking.
//! - [`objective`]: exact-valued objectives, built-in families, file loader.
//! - [`landscape`]: digraph construction, levels, reachability, DOT export.
//! - [`search`]: trajectories F / FA / FAB and multistart runs.
//! - [`control`]: probing, strategy selection, execution and run records.

pub mod control;
pub mod error;
pub mod fixtures;
pub mod landscape;
pub mod objective;
pub mod perm;
pub mod search;

pub use error::{Error, ErrorCode, Result};
pub use objective::{Objective, ObjectiveKind, Value};
pub use perm::{KNeighborhood, NeighborPartition, PermSpace, Permutation, WindowMove};

/// Tool version echoed into every machine-readable document.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
