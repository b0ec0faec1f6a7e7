use thiserror::Error;

/// Errors produced by the library.
///
/// Vertex indices are stored 0-based but rendered 1-based in messages.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix must be non-empty")]
    EmptyMatrix,

    #[error("matrix is not square: {rows} x {cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("undirected network has asymmetric weights at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },

    #[error("leader set is empty")]
    EmptyLeaderSet,

    #[error("every vertex is a leader; at least one follower is required")]
    NoFollowers,

    #[error("leader vertex {} is out of range (network has {order} vertices)", .index + 1)]
    LeaderOutOfRange { index: usize, order: usize },

    #[error("leader vertex {} is listed more than once", .index + 1)]
    DuplicateLeader { index: usize },

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("row {} has zero absolute sum", .row + 1)]
    ZeroRow { row: usize },

    #[error("{0} failed to converge")]
    NoConvergence(&'static str),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid sweep configuration: {0}")]
    Config(String),

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error("trend statistics need at least 3 grid points with defined aggregates, found {0}")]
    TooFewPoints(usize),
}

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
