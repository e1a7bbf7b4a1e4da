use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("half-edges ({0}, {1}) do not form an internal edge")]
    NotInternalEdge(usize, usize),

    #[error("resource ceiling of {ceiling} candidate graphs exceeded while {context}")]
    ResourceCeiling { ceiling: usize, context: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("horizon too short: need at least {needed} values, got {got}")]
    HorizonTooShort { needed: usize, got: usize },

    #[error("no exponential-polynomial fit with bases 1..={bases} within {horizon} values")]
    NoFit { bases: usize, horizon: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
