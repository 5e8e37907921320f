//! Unigraphs from degree sequences: canonical decomposition, recognition of
//! the indecomposable unigraph families, and distinguishing numbers.
//!
//! The fast path works entirely on abbreviated degree sequences. Explicit
//! graphs ([`graph`]), family generators ([`family`]), random instances
//! ([`random`]) and a brute-force checker ([`oracle`]) exist for testing and
//! for the command-line front end.

pub mod decompose;
pub mod degseq;
pub mod dist;
pub mod error;
pub mod family;
pub mod graph;
pub mod oracle;
pub mod random;

pub use decompose::{decompose, decompose_compact, Component, DecompositionResult, GoodPair};
pub use degseq::{DegreeRun, DegreeSequence, PairedDegreeSequence, RelativeTag};
pub use dist::{find_dist_unigraph, threshold_dist, UnigraphKind, UnigraphReport};
pub use error::{Error, Result};
