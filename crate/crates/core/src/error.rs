use thiserror::Error;

/// Errors raised while building protocols or evaluating their energies.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("invalid trap: {0}")]
    InvalidTrap(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("sample length {got} does not match grid length {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("curve and profile are sampled on different grids")]
    GridMismatch,

    #[error("scaling function is not positive (b = {b:e} at t = {t})")]
    NonPositiveWidth { t: f64, b: f64 },

    #[error(
        "imaginary trap frequency (omega^2 = {omega2:e} at t = {t}); non-adiabatic energy needs omega >= 0"
    )]
    NonRealFrequency { t: f64, omega2: f64 },

    #[error("power is undefined for protocols with Dirac impulses")]
    PowerUndefined,

    #[error("non-finite state at t = {t}")]
    NonFinite { t: f64 },

    #[error("scaling function collapsed (b = {b:e} at t = {t})")]
    Collapse { t: f64, b: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no feasible point: {0}")]
    Infeasible(String),

    #[error("{0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter { name, reason: reason.into() }
}
