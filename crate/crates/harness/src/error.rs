//! Harness-level errors, split by the exit code they map to: configuration
//! problems exit 2, invariant failures exit 1.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("config error: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("learner error: {0}")]
    Core(#[from] eqgraph_core::Error),
}
