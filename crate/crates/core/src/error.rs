//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

/// Errors reported by solvers, closed forms and input validation.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation.
    Domain(&'static str),
    /// A term was evaluated at a singular point (e.g. Coulomb at r = 0).
    Singularity { x: f64 },
    /// A term evaluation produced a non-finite value at the given argument.
    NonFinite { x: f64 },
    /// No sign change was found in the supplied root bracket.
    NoBracket,
    /// The pre-scan detected a non-monotone energy curve where a monotone
    /// one is required for root finding.
    NonMonotone,
    /// No point of the fit bracket yields a usable (status Ok) solution.
    Infeasible,
    /// An attractive potential that vanishes at infinity produced no
    /// negative eigenvalue on the grid.
    NoBoundState,
    /// The wavefunction tail at the grid edge exceeds the allowed fraction
    /// of the peak; the grid's `r_max` is too small.
    GridTooSmall { tail_ratio: f64 },
    /// Malformed text input (state strings, config values).
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::Singularity { x } => write!(f, "singular evaluation at x = {x}"),
            Error::NonFinite { x } => write!(f, "non-finite evaluation at x = {x}"),
            Error::NoBracket => write!(f, "no sign change in the supplied bracket"),
            Error::NonMonotone => write!(f, "energy is not monotone over the bracket"),
            Error::Infeasible => write!(f, "no usable solution anywhere in the bracket"),
            Error::NoBoundState => write!(f, "no bound state found for an attractive potential"),
            Error::GridTooSmall { tail_ratio } => {
                write!(f, "wavefunction tail is {tail_ratio:.2e} of the peak; increase r_max")
            }
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
