use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set of size {0} exceeds the 64-point limit")]
    GroundSetTooLarge(usize),
    #[error("point {point} lies outside the ground set [{d}]")]
    PointOutOfRange { point: usize, d: usize },
    #[error("circuit elimination fails for {c1} and {c2} at point {point}")]
    AxiomViolation { c1: String, c2: String, point: usize },
    #[error("declared rank {declared} but the circuits give rank {actual}")]
    RankMismatch { declared: usize, actual: usize },
    #[error("ground sets differ: {0} vs {1}")]
    GroundSetMismatch(usize, usize),
    #[error("hypergraph violates the matroid conditions")]
    ConditionsFailed,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("matroid is not simple")]
    NotSimple,
    #[error("matroid has rank {0}, expected 4")]
    NotRankFour(usize),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
