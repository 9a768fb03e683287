//! Covering counts and Kocay-type identities for small simple graphs and their
//! 2-edge-refined (red/blue) counterparts, together with deck-only
//! reconstruction pipelines built on them.
//!
//! Everything is exact: individual subgraph counts are `u64`, while products,
//! cover counts and identity sums use arbitrary-precision integers and rationals.

mod bits;
pub mod colored;
pub mod counting;
pub mod covering;
mod error;
pub mod format;
pub mod graph;
pub mod par;
pub mod reconstruct;
pub mod sweep;

pub use bits::MAX_N;
pub use colored::{two_form, Color, ColoredCanonicalForm, ColoredGraph};
pub use counting::{ColoredDeck, Deck, Mode};
pub use covering::{CoverSequence, CoveringSystem, KocayReport, LabeledCopy};
pub use error::{Error, Result};
pub use graph::{CanonicalForm, Graph, Pair, Permutation};
pub use par::Execution;
pub use reconstruct::{ReconstructionReport, Status};
