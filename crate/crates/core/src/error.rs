use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point set must contain at least one point")]
    EmptySet,

    #[error("coordinate {value} at position {index} is not finite")]
    InvalidCoordinate { index: usize, value: f64 },

    #[error("correspondence does not cover both sets: {0}")]
    CoverageViolation(String),

    #[error("instance of size {n}x{m} exceeds the enumeration cap of {cap} points per side")]
    InstanceTooLarge { n: usize, m: usize, cap: usize },

    #[error("edge ({p}, {q}) is not a double crossing of the designated edges")]
    NotApplicable { p: f64, q: f64 },

    #[error("alignment achieved {achieved} but the guaranteed bound is {bound}")]
    BoundViolation { achieved: f64, bound: f64 },

    #[error("separation {h} is below the required 50 * delta = {required}")]
    SeparationTooSmall { h: f64, required: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("I/O error: {0}")]
    Io(String),

    #[error("malformed input: {0}")]
    Format(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
