use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AppError {
    #[error(transparent)]
    Core(#[from] mackey_core::Error),

    #[error("failed to read {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("failed to write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{origin}:{line}: {msg}")]
    Parse { origin: String, line: usize, msg: String },

    #[error("invalid json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{0}")]
    Usage(String),
}

impl AppError {
    /// Process exit code: 2 for bad input, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Usage(_) | AppError::Parse { .. } | AppError::Read { .. } => 2,
            AppError::Core(e) => match e {
                mackey_core::Error::UnknownGroup(_)
                | mackey_core::Error::InvalidTable(_)
                | mackey_core::Error::DegreeOverflow(_)
                | mackey_core::Error::OrderTooLarge { .. }
                | mackey_core::Error::InvalidArgument(_)
                | mackey_core::Error::UnsupportedField(_) => 2,
                _ => 1,
            },
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, AppError>;
