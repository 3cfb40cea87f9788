use std::fmt;

use skeinlab_core::bounds::{LedgerError, TreeError};

/// A syntax or content error at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        Self { line, col, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] skeinlab_core::Error),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Ledger(#[from] LedgerError),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0} check(s) did not pass")]
    Verification(usize),
}

impl CliError {
    /// Process exit status: 2 for unreadable input, 3 for an exhausted
    /// budget, 4 for failed verification, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        use skeinlab_core::Error as E;
        match self {
            CliError::Parse(_) | CliError::Json(_) | CliError::Usage(_) | CliError::Tree(_) => 2,
            CliError::Core(E::BudgetExceeded(_)) => 3,
            CliError::Core(E::InvalidDiagram(_) | E::InvalidSpec(_)) => 2,
            CliError::Verification(_) | CliError::Ledger(LedgerError::Mismatch(_)) => 4,
            _ => 1,
        }
    }
}
