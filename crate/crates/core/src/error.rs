use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("point {point} is out of range for degree {n}")]
    PointOutOfRange { point: i64, n: usize },
    #[error("point {0} appears in more than one block")]
    RepeatedPoint(i64),
    #[error("point {0} is missing")]
    MissingPoint(i64),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("diagram is not planar")]
    NotPlanar,
    #[error("diagram is not in the Jones monoid of even degree")]
    NotJones,
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("invalid rank {r} for {family}")]
    InvalidRank { family: String, r: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("size guard exceeded: estimated cost {estimated} exceeds limit {limit}")]
    Guard { estimated: String, limit: String },
    #[error("{0} is not an idempotent of the J-class")]
    NotClassIdempotent(String),
    #[error("operation not supported for {0}")]
    Unsupported(String),
    #[error("bipartite graph is unbalanced: {0} left vs {1} right vertices")]
    Unbalanced(usize, usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
