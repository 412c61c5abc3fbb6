use thiserror::Error;

/// Errors raised while validating or evaluating a resilience model.
///
/// Everything here is a *domain* problem — bad weights, impossible anchors,
/// references to attributes that don't exist. I/O failures are left to the
/// caller's error type since this crate never touches the filesystem.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("weights sum to {sum}")]
    WeightSum { sum: f64 },

    #[error("unknown attribute `{id}`")]
    UnknownAttribute { id: String },

    #[error("duplicate id `{id}`")]
    DuplicateId { id: String },

    #[error("attribute `{id}` appears in a pair but has no paired partner definition")]
    UnpairedAttribute { id: String },

    #[error("node `{id}` mixes child objectives with leaf attributes")]
    MixedChildren { id: String },

    #[error("empty hierarchy: no leaf attributes reachable from the root")]
    EmptyHierarchy,

    #[error("cycle detected through node `{id}`")]
    Cycle { id: String },

    #[error("value function for `{id}`: {reason}")]
    InvalidValueFunction { id: String, reason: String },

    #[error("distribution for `{id}`: {reason}")]
    InvalidDistribution { id: String, reason: String },

    #[error(
        "lognormal anchors infeasible: p95/mean = {ratio} outside (1, {max}] \
         (mean {mean}, p95 {p95})"
    )]
    LognormalInfeasible {
        mean: f64,
        p95: f64,
        ratio: f64,
        max: f64,
    },

    #[error("normal anchors infeasible: p95 ({p95}) must exceed mean ({mean})")]
    NormalInfeasible { mean: f64, p95: f64 },

    #[error("correlation {rho} is outside the positive-definite range for {n} attributes")]
    BadCorrelation { rho: f64, n: usize },

    #[error("replication count must be positive")]
    ZeroReplications,

    #[error("scenario `{scenario}` missing distribution for attribute `{id}`")]
    MissingDistribution { scenario: String, id: String },

    #[error("{context}: {reason}")]
    Invalid { context: String, reason: String },
}

impl ModelError {
    pub fn invalid(context: impl Into<String>, reason: impl Into<String>) -> Self {
        ModelError::Invalid {
            context: context.into(),
            reason: reason.into(),
        }
    }
}
