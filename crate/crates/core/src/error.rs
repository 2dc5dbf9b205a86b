use thiserror::Error;

/// Errors produced by the numerical routines and the check ledger.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole at x = {0}")]
    Pole(f64),

    #[error("{what} did not converge: estimated error {achieved:e} > tolerance {tol:e} after {effort} terms")]
    NonConvergence {
        what: &'static str,
        achieved: f64,
        tol: f64,
        effort: usize,
    },

    #[error("quadrature tolerance {tol:e} not reached within {subdivisions} subdivisions (estimate {achieved:e})")]
    ToleranceNotReached {
        achieved: f64,
        tol: f64,
        subdivisions: usize,
    },

    #[error("non-integrable behaviour near x = {0}")]
    NonIntegrable(f64),

    #[error("branch undefined: {0}")]
    BranchUndefined(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("inconsistent results: {0}")]
    Inconsistent(String),

    #[error("unknown check id '{0}'")]
    UnknownCheck(String),

    #[error("unknown tag '{0}'")]
    UnknownTag(String),

    #[error("unknown formula id '{0}'")]
    UnknownFormula(String),

    #[error("precision budget exceeded: {0}")]
    PrecisionBudget(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
