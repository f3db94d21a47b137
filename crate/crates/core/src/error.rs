use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Syntax error or a graph that is not functional.
    #[error("malformed input{}: {message}{}", line.map(|l| format!(" at line {l}")).unwrap_or_default(), if token.is_empty() { String::new() } else { format!(" (near {token:?})") })]
    MalformedInput {
        line: Option<usize>,
        token: String,
        message: String,
    },

    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),

    /// The spine decorations of a cut unroll tree do not repeat with the
    /// requested period.
    #[error("tree is not the cut of a component with period {period}")]
    NotPeriodic { period: usize },

    #[error("polynomial has no cancelable non-constant coefficient; equations over it may have several solutions")]
    NotSupportedNonInjective,

    #[error("counterexample construction failed verification: {0}")]
    ConstructionFailed(String),

    #[error("enumeration limit exceeded: {0}")]
    LimitExceeded(String),
}

impl Error {
    pub(crate) fn malformed(message: impl Into<String>, token: impl Into<String>) -> Error {
        Error::MalformedInput {
            line: None,
            token: token.into(),
            message: message.into(),
        }
    }

    /// Attaches a 1-based line number to a `MalformedInput` error.
    pub(crate) fn at_line(self, n: usize) -> Error {
        match self {
            Error::MalformedInput { token, message, .. } => Error::MalformedInput {
                line: Some(n),
                token,
                message,
            },
            other => other,
        }
    }
}
