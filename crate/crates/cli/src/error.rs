use std::process::ExitCode;

use omrev::OmError;

/// Failures mapped onto the process exit codes: 1 for bad input or a build
/// failure, 2 for a failed assertion.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Assertion(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Input(_) => ExitCode::from(1),
            CliError::Assertion(_) => ExitCode::from(2),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "error: {msg}"),
            CliError::Assertion(msg) => write!(f, "assertion failed: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<OmError> for CliError {
    fn from(e: OmError) -> Self {
        CliError::Input(e.to_string())
    }
}
