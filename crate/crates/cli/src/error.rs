use thiserror::Error;

/// Everything the front end can report.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("input contains no points")]
    EmptyInput,
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] toric_nash::Error),
}

impl CliError {
    pub fn syntax(line: usize, message: impl Into<String>) -> Self {
        CliError::Syntax {
            line,
            message: message.into(),
        }
    }

    pub fn usage(message: impl Into<String>) -> Self {
        CliError::Usage(message.into())
    }

    /// Stable machine-readable identifier.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Syntax { .. } => "syntax-error",
            CliError::EmptyInput => "empty-input",
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
            CliError::Core(e) => e.code(),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
