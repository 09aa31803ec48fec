//! Error classification for exit codes: problems with the command line
//! itself exit 2 (like clap's own usage failures), problems with runtime
//! inputs or computation exit 1.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Malformed invocation; exit code 2.
    Usage(String),
    /// Bad data, infeasible problem, or failed computation; exit code 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Domain(msg) => write!(f, "error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<activeinfo::Error> for CliError {
    fn from(e: activeinfo::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}
