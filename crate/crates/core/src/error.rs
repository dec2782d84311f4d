use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed arguments: out-of-range vertices, self-loops, bad parameters.
    #[error("invalid input: {0}")]
    Input(String),

    /// The query is well-formed but has no value, e.g. a dimension with no faces.
    #[error("{0}")]
    Domain(String),

    /// A dense operator would exceed the basis size cap.
    #[error("basis of dimension {dim} has {size} elements, above the cap of {cap}")]
    SizeCap { dim: isize, size: usize, cap: usize },

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    /// Two routes that must agree did not, or a checked statement failed.
    #[error("integrity check failed: {0}")]
    Integrity(String),

    #[error("asymmetric matrix: entry ({row}, {col}) differs from its transpose")]
    Asymmetric { row: usize, col: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
