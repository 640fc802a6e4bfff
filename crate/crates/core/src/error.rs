use thiserror::Error;

use crate::graph::ModelId;

/// Errors shared by the graph machinery and the learners.
#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("({from}, {to}) is not a feedback edge")]
    NotAFeedbackEdge { from: ModelId, to: ModelId },

    #[error("total model weight is zero")]
    ZeroTotalWeight,

    #[error("consistent set became empty: target was not in the initial set")]
    TargetNotInSet,

    #[error("invalid learner schedule: {0}")]
    InvalidSchedule(String),

    #[error("local search exceeded its move cap (sampler bias beyond the declared slack?)")]
    IterationCapExceeded,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
