use thiserror::Error;

use crate::scalar::ScalarParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("gap matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("a gap space needs at least one point")]
    EmptySpace,
    #[error("tolerance must be a nonnegative finite number, got {0}")]
    BadTolerance(f64),
    #[error("{count} labels given for {points} points")]
    LabelCount { count: usize, points: usize },
    #[error("triangle inequality fails for {count} ordered triple(s), first ({x}, {y}, {z})")]
    TriangleViolation { count: usize, x: usize, y: usize, z: usize },
    #[error("operation requires a metric space")]
    NotMetric,
    #[error("point index {index} out of range for {points} points")]
    IndexOutOfRange { index: usize, points: usize },
    #[error("index {0} repeated in an ordered sequence")]
    RepeatedIndex(usize),
    #[error("empty point set")]
    EmptySubset,
    #[error("{0:?} is not a string")]
    NotAString(Vec<usize>),
    #[error("epsilon must be nonnegative")]
    NegativeEpsilon,
    #[error("{points} points exceed the brute-force oracle limit of {limit}")]
    OracleLimit { points: usize, limit: usize },
    #[error("{points} points exceed the subset limit of {limit} for this operation")]
    TooManyPoints { points: usize, limit: usize },
    #[error("invalid generator input: {0}")]
    Generator(String),
    #[error("arc {from} -> {to} has negative length")]
    NegativeArc { from: usize, to: usize },
    #[error("digraph is not strongly connected: no path from {from} to {to}")]
    NotStronglyConnected { from: usize, to: usize },
    #[error("string set is not downward closed: face {face:?} of {simplex:?} is {problem}")]
    NotClosed { simplex: Vec<usize>, face: Vec<usize>, problem: &'static str },
    #[error("endpoint pair must consist of two distinct points")]
    SameEndpoints,
    #[error("filtration order violated: face {face:?} does not precede {simplex:?}")]
    FaceOrder { simplex: Vec<usize>, face: Vec<usize> },
    #[error("integer overflow during Smith normal form elimination")]
    Overflow,
    #[error("invalid triangulation: {0}")]
    Triangulation(String),
    #[error("triangulation is not admissible: {0}")]
    NotAdmissible(String),
    #[error("realization parameters must satisfy k > 0 and k/2 < u, v < k")]
    BadParams,
    #[error("unknown surface `{0}`")]
    UnknownSurface(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Scalar(#[from] ScalarParseError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for malformed-input errors, as opposed to mathematical ones.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NotSquare { .. }
                | Error::LabelCount { .. }
                | Error::Parse(_)
                | Error::Scalar(_)
                | Error::Json(_)
                | Error::Csv(_)
        )
    }
}
