use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid box context: need 1 <= r < n, got r={r}, n={n}")]
    InvalidContext { r: usize, n: usize },

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<i64>, reason: &'static str },

    #[error("partition {parts:?} does not fit the {r}x{width} box")]
    OutsideBox { parts: Vec<i64>, r: usize, width: usize },

    #[error("invalid subset {indices:?}: {reason}")]
    InvalidSubset { indices: Vec<usize>, reason: &'static str },

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not unit upper triangular")]
    NotUnipotent,

    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("line at angle {phi} is not admissible for the given points")]
    NotAdmissible { phi: f64 },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
