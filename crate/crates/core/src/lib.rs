//! Cold-start top-n item recommendation.
//!
//! Learns an item-item similarity of the form W = D + VᵀV from implicit
//! feedback with BPR stochastic gradient descent, scores unseen items from
//! their content features, and evaluates top-n lists with Rec@n and DCG@n.
//! Ships the cosine and linear-similarity baselines, a TF-IDF feature
//! pipeline, item-wise splits, and verification tooling (finite-difference
//! gradient checks, a dense brute-force oracle, operation counters).

pub mod error;
pub mod sparse;

pub use error::{Error, Result};
