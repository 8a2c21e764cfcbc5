use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("divided Bernoulli quantity is undefined for index 0")]
    DividedIndexZero,

    #[error("scaling factor must be nonzero")]
    ZeroScale,

    #[error("{0}")]
    Domain(String),

    #[error("cache file line {line}: {reason}")]
    Cache { line: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
