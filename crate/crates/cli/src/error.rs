use std::path::PathBuf;

/// Errors of the command-line front end.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Logic(#[from] teamlogic::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: line {line}: {message}", path.display())]
    TeamFile {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("{}: {source}", path.display())]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("output error: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    /// Process exit status: 3 for capacity limits, 2 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Logic(
                teamlogic::Error::Capacity { .. }
                | teamlogic::Error::TeamTooLarge { .. }
                | teamlogic::Error::SearchLimit(_),
            ) => 3,
            _ => 2,
        }
    }
}
