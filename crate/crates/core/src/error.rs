//! Error type shared by all toolkit operations.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Fixed-point or density iteration exhausted its budget without meeting
    /// the requested tolerance. Usually signals a non-contractive map.
    #[error("no convergence: {0}")]
    NoConvergence(String),

    /// An enumeration (words, attractor points, pairwise distances) would
    /// exceed the configured cap.
    #[error("budget exceeded: {what} needs {needed} > cap {cap}")]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },

    /// Input outside the operation's domain, or an operation applied to a
    /// system kind it does not support.
    #[error("domain error: {0}")]
    DomainError(String),

    /// The solution enclosure did not shrink below the tolerance within the
    /// depth cap. Carries the best midpoint/bound achieved, so callers can
    /// still use the partial answer.
    #[error("depth cap {depth} exceeded: best value {value} +/- {err_bound}")]
    DepthExceeded {
        value: f64,
        err_bound: f64,
        depth: usize,
    },

    /// `evaluate_word` was asked for a corner with no declared boundary value.
    #[error("no boundary value declared for corner {0}")]
    MissingBoundary(usize),

    /// A map derivative or integrand produced NaN/inf on a sample point.
    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("empty point cloud")]
    EmptyCloud,

    /// Box counts identical at every scale: the slope fit is meaningless.
    #[error("degenerate box-count fit: all counts equal")]
    DegenerateFit,

    /// A map that must be weakly contractive is not (sampled Lipschitz
    /// quotient above 1, or above the declared hint).
    #[error("map {index} on the {side} side is not weakly contractive")]
    NotContractive { side: &'static str, index: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
