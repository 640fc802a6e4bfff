//! Domain-generic machinery for interactive learning from equivalence
//! queries over feedback graphs.
//!
//! A learner repeatedly proposes a complete model (a ranking, clustering,
//! classifier, …); the user either confirms it or replies with a local
//! correction. Under the feedback-graph contract — every correct correction
//! lies on a shortest path to the target — querying a weighted graph median
//! discards a constant fraction of the remaining candidate mass per round,
//! which yields logarithmic query counts without noise and
//! information-theoretically near-optimal counts under probabilistic noise.
//!
//! This crate provides the generic layer: graphs, reach sets, potentials,
//! exact and sampling-based median selection, simulated users, and the
//! noiseless and noisy learners. Concrete model families (permutations,
//! partitions, label vectors) live in sibling crates and plug in through
//! [`DomainAdapter`].

pub mod adapter;
pub mod error;
pub mod explicit;
pub mod graph;
pub mod learner;
pub mod median;
pub mod oracle;
pub mod potential;
pub mod schedule;
pub mod weights;

pub use adapter::DomainAdapter;
pub use error::Error;
pub use explicit::ExplicitDomain;
pub use graph::{Edge, FeedbackGraph, ModelId, INFINITE};
pub use learner::{learn_noiseless, learn_noisy, multiweights, LearnOutcome, NoisyOutcome};
pub use median::{
    sampled_median, GammaMedian, LocalSearchSpace, MedianSelector, PhiMedian, SampleBudget,
    SampledLocalSearch, WeightSampler,
};
pub use oracle::{NoiseModel, Oracle, SimulatedUser, ValidChoice};
pub use potential::{exact_median, gamma_potential, potential};
pub use schedule::{entropy, NoisySchedule};
pub use weights::LikelihoodState;
