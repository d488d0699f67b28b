use thiserror::Error;

/// Failure modes shared by every numerical routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative scheme or quadrature ran out of budget.
    #[error("{what} did not converge after {iterations} steps (last error estimate {estimate:e})")]
    NoConvergence { what: &'static str, iterations: usize, estimate: f64 },

    /// The integrand produced NaN or an infinity inside the interval.
    #[error("integrand is not finite at x = {x:e}")]
    NonFiniteIntegrand { x: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) => 2,
            Error::NoConvergence { .. } | Error::NonFiniteIntegrand { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Rejects NaN and infinities before any range check runs.
pub(crate) fn finite(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::domain(format!("{name} must be finite, got {v}")))
    }
}
