use thiserror::Error;

/// Errors raised by the evaluators in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    #[error("{func} diverges at {at}")]
    Divergent { func: &'static str, at: f64 },

    #[error("overflow in {func}: {detail}")]
    Overflow { func: &'static str, detail: String },

    #[error("underflow in {func}: result below the smallest normal double")]
    Underflow { func: &'static str },

    #[error("{func} did not converge after {iterations} iterations")]
    NonConvergence { func: &'static str, iterations: usize },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("case {case}: {source}")]
    Case { case: String, source: Box<Error> },

    #[error("line {line}: {detail}")]
    Parse { line: u64, detail: String },

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain { func, detail: detail.into() }
    }

    /// True for errors caused by the caller's arguments rather than by the computation.
    pub fn is_domain(&self) -> bool {
        match self {
            Error::Domain { .. } | Error::Unsupported(_) | Error::Parse { .. } => true,
            Error::Case { source, .. } => source.is_domain(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
