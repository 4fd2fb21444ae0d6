use thiserror::Error;

/// Failure modes shared by every numeric routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative method ran out of budget before meeting its tolerance.
    #[error("convergence failure: {0}")]
    Convergence(String),

    #[error("non-finite integrand value at x = {0}")]
    NonFinite(f64),

    #[error("invalid bracket [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    InvalidBracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn convergence(msg: impl Into<String>) -> Self {
        Error::Convergence(msg.into())
    }

    /// True for failures caused by the caller's input rather than the numerics.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::Malformed(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
