//! Experiment harness for the feedback-graph learners: typed configs from
//! `key=value` files and CLI flags, seeded trial runners for every domain,
//! fixed-schema CSV emission, reference query bounds, and a deterministic
//! invariant-verification suite.

pub mod bounds;
pub mod config;
pub mod csvio;
pub mod error;
pub mod experiment;
pub mod inputs;
pub mod verify;

pub use bounds::{beta_for, theoretical_bound};
pub use config::{
    ConfigDraft, DomainKind, ExperimentConfig, FamilySpec, MedianKind, NoiseKind, OracleKind,
};
pub use csvio::{csv_string, emit_csv, parse_csv, CSV_HEADER};
pub use error::HarnessError;
pub use experiment::{initial_support_size, run_experiment, RunRecord, Summary};
pub use inputs::{generate_points, load_family, load_points, load_weights};
pub use verify::{verify_suite, CheckResult};
