use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("{0:?} is not a positive root")]
    NotPositiveRoot(Vec<i64>),

    #[error("{0} is not a component index (expected 0 or a vertex with Kac label 1)")]
    InvalidComponent(usize),

    #[error("facet description is only available up to rank 3 (got rank {0})")]
    UnsupportedRank(usize),

    #[error("bruhat comparison across different cosets of the coroot lattice")]
    CosetMismatch,

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
