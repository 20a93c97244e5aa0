//! Matching numbers of graphs: maximum, induced, disconnected and
//! c-disconnected matchings, deciders for when they coincide, gadget
//! builders for the associated hardness reductions, and a construction
//! realizing prescribed sequences of c-disconnected matching numbers.

pub mod census;
pub mod deciders;
pub mod error;
pub mod graph;
pub mod io;
pub mod matching;
pub mod reductions;
pub mod restricted;
pub mod sequence;

pub use error::{Error, Result};
pub use graph::{Bipartition, Diameter, Graph, GraphBuilder};
pub use matching::{analyze, is_maximal, maximum_matching, Matching, MatchingAnalysis};
pub use restricted::{full_profile, oracle_enumerate, Budget, MatchingNumbers};
