use std::fmt;

use sasaki_join_core::classify::ClassifyError;
use sasaki_join_core::cscrays::CscError;
use sasaki_join_core::joinspace::{ParamError, TopologyError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_INTERNAL: u8 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// The request cannot be served: bad flags, violated constraints, empty ranges.
    Invalid(String),
    /// A core invariant failed; the input was fine.
    Internal(String),
}

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(msg) => write!(f, "invalid input: {msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CscError> for CliError {
    fn from(e: CscError) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Invalid(e.to_string())
        }
    }
}

impl From<ParamError> for CliError {
    fn from(e: ParamError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<TopologyError> for CliError {
    fn from(e: TopologyError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        CliError::Invalid(e.to_string())
    }
}
