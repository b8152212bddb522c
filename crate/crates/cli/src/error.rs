use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Core(#[from] casimir_core::Error),
    #[error("{0}")]
    CheckFailed(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed report: {0}")]
    Report(String),
}

impl CliError {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    /// 0 ok, 2 domain or validation, 3 convergence, 4 I/O.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) | CliError::Report(_) => 2,
            CliError::Core(e) if e.is_domain() => 2,
            CliError::Core(_) | CliError::CheckFailed(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}
