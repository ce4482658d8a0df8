use thiserror::Error;

/// Errors raised by the evaluation routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the supported domain.
    #[error("out of domain: {0}")]
    OutOfDomain(String),

    /// No theorem in the registry supplies a uniform bound for these parameters.
    #[error("no registered bound covers {id} at nu={nu}, beta={beta}")]
    Uncovered { id: String, nu: f64, beta: f64 },

    #[error("unknown inequality case `{0}`")]
    UnknownCase(String),

    #[error("no sharpness claim registered for `{id}` in the limit {limit}")]
    NoSharpnessClaim { id: String, limit: String },

    /// A quadrature or series failed to reach its tolerance.
    #[error("no convergence: {0}")]
    NoConvergence(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::OutOfDomain(msg.into()))
}
