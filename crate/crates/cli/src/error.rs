use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// The requested scan violates a precondition.
    #[error("invalid spec: {0}")]
    Invalid(String),

    #[error(transparent)]
    Numerical(#[from] scatter_core::Error),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }

    pub fn io(path: impl Into<String>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status: 2 for a bad spec (including a kernel rejecting a
    /// point as outside its domain), 3 for numerical failure, 1 for i/o.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Numerical(scatter_core::Error::Domain { .. }) => 2,
            CliError::Numerical(_) => 3,
            CliError::Io { .. } => 1,
        }
    }
}
