//! CLI error type with stable exit codes.
//!
//! Exit codes: 0 success, 1 usage, 2 parse failure, 3 verification failure
//! (including bench output inequality and invariant mismatches), 4 cycle
//! limit, 5 I/O failure.

use std::path::PathBuf;
use thiserror::Error;
use tietze_core::CoreError;

/// A text-format parse failure with source position and expectation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at {line}:{col}: expected {expected}, found {found}")]
pub struct ParseError {
    pub line: u32,
    pub col: u32,
    pub expected: String,
    pub found: String,
}

impl ParseError {
    pub fn new(line: u32, col: u32, expected: &str, found: &str) -> ParseError {
        ParseError {
            line,
            col,
            expected: expected.into(),
            found: found.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("compact format supports at most 26 live generators, got {live}")]
    CompactOverflow { live: usize },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Verification(_) => 3,
            CliError::CompactOverflow { .. } => 3,
            CliError::Io { .. } => 5,
            CliError::Core(CoreError::CycleLimit { .. }) => 4,
            CliError::Core(_) => 3,
        }
    }
}
