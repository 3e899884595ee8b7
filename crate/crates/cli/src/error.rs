use thiserror::Error;

/// Command failures, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error("{message}")]
    Window {
        message: String,
        required_max: Option<u64>,
    },

    #[error(transparent)]
    Core(#[from] boxcover::Error),

    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Window { .. } | CliError::Core(boxcover::Error::InvalidWindow { .. }) => {
                crate::EXIT_WINDOW
            }
            _ => crate::EXIT_INPUT,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
