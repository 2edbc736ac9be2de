//! Error type shared across the crate.

/// Errors produced by the library and the `wordlab` command line.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A mathematical precondition was violated (head position out of range,
    /// invalid threshold, degenerate chain, ...).
    #[error("{0}")]
    Domain(String),

    /// A run configuration could not be assembled (bad flag value, unknown
    /// config key, inconsistent options).
    #[error("{0}")]
    Config(String),

    /// Structured input could not be parsed.  `line` is 1-based and counts
    /// the header line of tabular files.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An underlying read or write failed.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }

    pub fn config(message: impl Into<String>) -> Self {
        Error::Config(message.into())
    }

    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    /// Process exit code for the `wordlab` binary: domain and configuration
    /// problems exit 1, I/O and parse problems exit 2.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Config(_) => 1,
            Error::Parse { .. } | Error::Io(_) => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
