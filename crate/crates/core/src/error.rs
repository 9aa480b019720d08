use thiserror::Error;

/// Errors raised by the library.
///
/// The variants fall into three families that the command-line front end
/// maps onto distinct exit codes: usage problems (bad input), mathematical
/// domain violations (a well-formed request outside the supported range),
/// and internal-consistency failures (a computed invariant did not hold).
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid prime {0}: expected an odd prime with 3 <= p <= 13")]
    InvalidPrime(u32),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("inconsistent system: right-hand side is outside the column space")]
    InconsistentSystem,

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("degree too large: {0}")]
    DegreeTooLarge(String),

    #[error("not a Lie element: {0}")]
    NotLieElement(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Exit code used by the CLI: 1 usage, 2 math-domain, 3 internal consistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::InvalidPrime(_) | Error::Io(_) | Error::Json(_) => 1,
            Error::ShapeMismatch(_)
            | Error::InconsistentSystem
            | Error::OutOfRange(_)
            | Error::DegreeTooLarge(_)
            | Error::NotLieElement(_) => 2,
            Error::Inconsistent(_) | Error::Cache(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Shorthand for an internal-consistency failure.
pub(crate) fn inconsistent(msg: impl Into<String>) -> Error {
    Error::Inconsistent(msg.into())
}
