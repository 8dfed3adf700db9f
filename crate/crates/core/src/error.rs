use thiserror::Error;

use crate::quadrature::QuadResult;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// The requested index exceeds the configured memo-table capacity.
    #[error("index {requested} exceeds the capacity limit {limit}")]
    Capacity { requested: usize, limit: usize },

    #[error("domain error: {0}")]
    Domain(String),

    /// Quadrature hit its refinement cap before reaching the tolerance.
    #[error(
        "quadrature did not reach tolerance {tol:e} (best value {}, error estimate {:e})",
        best.value,
        best.err_estimate
    )]
    Accuracy { tol: f64, best: QuadResult },

    #[error("unknown check id `{id}`; valid ids: {}", valid.join(", "))]
    UnknownCheck { id: String, valid: Vec<String> },

    #[error("cannot parse rational from `{0}`")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
