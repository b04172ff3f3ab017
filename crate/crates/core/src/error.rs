use thiserror::Error;

/// Errors raised by the energy routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("lambda = {lambda} outside the admissible range {range}")]
    LambdaOutOfRange { lambda: f64, range: &'static str },

    #[error("argument {name} = {value} is invalid: {reason}")]
    InvalidArgument {
        name: &'static str,
        value: String,
        reason: &'static str,
    },

    #[error("point has dimension {got}, expected {expected}")]
    DimensionMismatch { got: usize, expected: usize },

    #[error("point is not on the unit sphere (norm {norm})")]
    NotOnSphere { norm: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, value: impl ToString, reason: &'static str) -> Error {
    Error::InvalidArgument {
        name,
        value: value.to_string(),
        reason,
    }
}
