//! Exact power indices and mergeability tools for weighted majority games.
//!
//! A weighted majority game `[q; w_1, ..., w_n]` is a simple game in which a
//! coalition wins when its total weight reaches the quota `q`. This crate
//! computes the Shapley-Shubik, normalized Banzhaf, Deegan-Packel, Public
//! Good, Colomer-Martínez and HCM power indices in exact rational
//! arithmetic, implements the WM-union of weighted majority games together
//! with its four-condition mergeability test, and provides executable
//! checks of the axioms used to characterize these indices.

pub mod axioms;
pub mod cli;
pub mod games;
pub mod indices;
pub mod io;
pub mod merging;
pub mod sampling;

/// Exact rational number used throughout.
pub type Rational = num_rational::BigRational;

pub use games::{Coalition, GameError, SimpleGame, SwingSet, VotingGame, WeightedMajorityGame};
pub use indices::{IndexKind, PowerIndexVector};
pub use merging::MergeabilityReport;
