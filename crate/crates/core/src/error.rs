use thiserror::Error;

/// Errors produced by coefficient construction, evaluation and quadrature.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// `mu` and `nu` do not have opposite parity.
    #[error("unsupported parity: mu and nu must have opposite parity")]
    UnsupportedParity { mu: u32, nu: u32 },

    /// A combination the closed form does not cover (e.g. sinh kernel with odd mu).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Adaptive quadrature failed to reach the requested tolerance.
    #[error("quadrature did not converge: estimate {estimate_re:e}{estimate_im:+e}i, error {est_error:e}")]
    Convergence {
        estimate_re: f64,
        estimate_im: f64,
        est_error: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
