use thiserror::Error;

use crate::registry::UnknownLawId;

/// A diagnostic for a spec document. Lines and columns are 1-based and
/// count characters.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("{line}:{col}: expected {expected}, found {found}")]
    Parse {
        line: usize,
        col: usize,
        expected: String,
        found: String,
    },
    #[error("{line}:{col}: undeclared {kind} `{name}`")]
    UndeclaredName {
        line: usize,
        col: usize,
        kind: String,
        name: String,
    },
    #[error("{line}:{col}: `{name}` is already declared on line {first}")]
    DuplicateName {
        line: usize,
        col: usize,
        name: String,
        first: usize,
    },
    #[error("{line}:{col}: malformed rational `{text}`{}", suggestion.as_ref().map(|s| format!("; write `{s}`")).unwrap_or_default())]
    MalformedRational {
        line: usize,
        col: usize,
        text: String,
        suggestion: Option<String>,
    },
    #[error("{line}:{col}: {message}")]
    Invalid {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{line}:{col}: {source}")]
    UnknownLaw {
        line: usize,
        col: usize,
        source: UnknownLawId,
    },
    #[error("cannot read `{path}`: {message}")]
    Io { path: String, message: String },
}

impl SpecError {
    /// `(line, column)` of the offending token, if the error has one.
    pub fn location(&self) -> Option<(usize, usize)> {
        match self {
            SpecError::Parse { line, col, .. }
            | SpecError::UndeclaredName { line, col, .. }
            | SpecError::DuplicateName { line, col, .. }
            | SpecError::MalformedRational { line, col, .. }
            | SpecError::Invalid { line, col, .. }
            | SpecError::UnknownLaw { line, col, .. } => Some((*line, *col)),
            SpecError::Io { .. } => None,
        }
    }
}
