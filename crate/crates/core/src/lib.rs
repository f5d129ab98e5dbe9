//! Degree sequences, fully graphic regions and P-stability at desk scale.
//!
//! * [`graphicality`]: Erdős–Gallai tests, the least Erdős–Gallai sequence
//!   of a region, fully graphic decisions and region predicates.
//! * [`enumeration`]: exact labeled realization counts, realization
//!   streams, perturbation families and the local measure `p(D)`.
//! * [`splitgraph`]: split sequences, split witnesses, Tyshkevich
//!   composition and the non-P-stability witness.
//! * [`mcmc`]: the switch Markov chain.
//!
//! The counting engine is generic over its scalar ([`Count`]); the aliases
//! below fix the exact types used throughout the rest of the crate.

pub mod enumeration;
pub mod error;
pub mod graph;
pub mod graphicality;
pub mod mcmc;
pub mod scalar;
pub mod sequence;
pub mod splitgraph;

pub use error::{Error, Result};
pub use graph::LabeledGraph;
pub use scalar::Count;
pub use sequence::{
    DegreeSequence, Perturbation, PerturbationKind, Region, SimpleRegion, VerySimpleRegion,
};

/// Exact realization count.
pub type RealizationCount = num_bigint::BigUint;

/// Exact value of the local P-stability measure.
pub type PMeasure = num_rational::BigRational;

/// The default exact counter.
pub type ExactCounter = enumeration::Counter<RealizationCount>;

/// A fast, inexact counter for magnitude estimates.
pub type FloatCounter = enumeration::Counter<f64>;
