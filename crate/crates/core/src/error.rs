use thiserror::Error;

/// Errors raised on malformed or inconsistent inputs.
///
/// Verdicts (a structure failing an axiom) are not errors; they are carried by
/// [`crate::certificate::Certificate`]. An `Error` means the question could not be posed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("subspace is not contained in the ambient subspace")]
    NotContained,

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error("invalid input: {0}")]
    Input(String),

    /// A structure failed a named axiom where the operation requires it.
    #[error("axiom `{axiom}` fails: {detail}")]
    Axiom { axiom: String, detail: String },

    /// A computation that must succeed by construction did not.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl Error {
    pub fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }

    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn axiom(axiom: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Axiom {
            axiom: axiom.into(),
            detail: detail.into(),
        }
    }

    /// Prefixes the location of a parse error with an enclosing path segment.
    pub fn at(self, prefix: &str) -> Self {
        match self {
            Error::Parse { path, message } => {
                let path = if path.is_empty() {
                    prefix.to_string()
                } else {
                    format!("{prefix}.{path}")
                };
                Error::Parse { path, message }
            }
            other => other,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
