use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Error)]
pub enum QgrError {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("resource limit exceeded: {what} needs {requested}, limit is {limit}")]
    ResourceLimit {
        what: String,
        requested: String,
        limit: String,
    },

    #[error("vertex {0} is a sink; reduce the quiver with `core` first")]
    SinkPresent(String),

    #[error("vertex {0} is a source; reduce the quiver with `core` first")]
    SourcePresent(String),

    #[error("vertex {0} is not a sink")]
    NotASink(String),

    #[error("vertex {0} is not a source")]
    NotASource(String),

    #[error("window [{start}, {end}] is too short for a tail at degree {degree}")]
    WindowTooShort { start: i64, end: i64, degree: i64 },

    #[error("tail at degree {0} is not verified projective")]
    UnverifiedTail(i64),

    #[error("map is not injective in degree {degree} at vertex {vertex}")]
    NotInjective { degree: i64, vertex: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl QgrError {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        QgrError::Parse {
            location: location.into(),
            message: message.into(),
        }
    }

    pub(crate) fn limit(
        what: impl Into<String>,
        requested: impl ToString,
        limit: impl ToString,
    ) -> Self {
        QgrError::ResourceLimit {
            what: what.into(),
            requested: requested.to_string(),
            limit: limit.to_string(),
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            QgrError::Io(_) => 1,
            QgrError::Parse { .. } => 2,
            QgrError::ResourceLimit { .. } => 3,
            QgrError::SinkPresent(_) | QgrError::SourcePresent(_) => 4,
            QgrError::NotASink(_) | QgrError::NotASource(_) => 5,
            QgrError::WindowTooShort { .. }
            | QgrError::UnverifiedTail(_)
            | QgrError::NotInjective { .. } => 6,
            QgrError::DimensionMismatch(_) | QgrError::InvalidInput(_) => 7,
        }
    }
}

pub type Result<T> = std::result::Result<T, QgrError>;
