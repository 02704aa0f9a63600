use thiserror::Error;

/// Errors raised by the numerical kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error in {op}: {msg}")]
    Domain { op: &'static str, msg: String },

    /// The gamma function has a pole at a non-positive integer.
    #[error("gamma function pole at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    /// An iterative summation did not settle within its term budget.
    #[error("{op} did not converge after {terms} terms")]
    NonConvergence { op: &'static str, terms: usize },

    /// The finite-difference step cannot resolve the local wavelength.
    #[error("step size h = {h} too coarse at rho = {rho} (need h*max(1, |gamma|/rho) < 0.1)")]
    StepSize { h: f64, rho: f64 },

    /// A configuration sits exactly on a singular point of a formula.
    #[error("singular configuration in {op}: {msg}")]
    Singular { op: &'static str, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, msg: impl Into<String>) -> Error {
    Error::Domain { op, msg: msg.into() }
}
