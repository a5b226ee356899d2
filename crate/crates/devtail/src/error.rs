use thiserror::Error;

/// Crate-wide error type.
///
/// The CLI maps variants onto exit codes: `Syntax`/`Spec` are input parse
/// failures, `Usage` is a caller mistake, `Domain`/`Degenerate` are
/// mathematical obstructions (vanishing denominators, failed theorem
/// hypotheses).
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("spec error: {0}")]
    Spec(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("math error: {0}")]
    Domain(String),
    #[error("degenerate: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn syntax(position: usize, message: impl Into<String>) -> Self {
        Error::Syntax {
            position,
            message: message.into(),
        }
    }
}
