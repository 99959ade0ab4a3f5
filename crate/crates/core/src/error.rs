//! Crate-wide error type.

use std::fmt;

/// Errors produced by exact arithmetic, family construction and the
/// verification engines.
///
/// `NotDivisible` and `DegreeMismatch` deserve a note: when they come out of
/// an identity check they do not mean "bad input", they mean the identity
/// under test failed to hold, so the suite surfaces them as findings rather
/// than swallowing them.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Exact division by the zero scalar.
    DivisionByZero,
    /// Binary operation on Laurent polynomials in different variables.
    VariableMismatch,
    /// `substitute_scale` with a zero scale factor.
    ZeroScale,
    /// `substitute_shift` on a Laurent polynomial with negative exponents.
    NegativeExponent,
    /// Exact polynomial division left a nonzero remainder.
    NotDivisible { context: String },
    /// Determinant of a non-square or empty matrix.
    NotSquare,
    /// A parameter slot required by the family is missing from the binding.
    UnboundParameter { slot: String },
    /// Binding values violate the family's validity conditions
    /// (conjugation closure, unit modulus, ranges needed for construction).
    InvalidBinding { reason: String },
    /// A representation polynomial could not be re-expressed in the
    /// sinusoidal coordinate.
    ConversionFailure { context: String },
    /// The assembled polynomial does not have the expected degree.
    DegreeMismatch { expected: usize, found: usize },
    /// A quantity that the construction divides by vanished at this binding.
    ZeroDenominator { context: String },
    /// Operation requires real parameters at the binding.
    NonRealParameter,
    /// Binding is outside the family's physical parameter range.
    NotPhysical,
    /// Operation only applies to difference (idQM) families.
    NotIdQm,
    /// Zero index out of range for the family's root list.
    IndexOutOfRange,
    /// Suite or file configuration problem.
    Config { message: String },
    /// Two quadrature refinements disagree beyond the requested tolerance.
    QuadratureNonConvergence { achieved: f64, required: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::VariableMismatch => write!(f, "laurent polynomials have different variables"),
            Error::ZeroScale => write!(f, "substitution scale factor is zero"),
            Error::NegativeExponent => {
                write!(f, "shift substitution requires a polynomial without negative exponents")
            }
            Error::NotDivisible { context } => write!(f, "not exactly divisible: {context}"),
            Error::NotSquare => write!(f, "matrix is not square (or empty)"),
            Error::UnboundParameter { slot } => write!(f, "unbound parameter: {slot}"),
            Error::InvalidBinding { reason } => write!(f, "invalid binding: {reason}"),
            Error::ConversionFailure { context } => {
                write!(f, "cannot convert to sinusoidal-coordinate basis: {context}")
            }
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected}, found {found}")
            }
            Error::ZeroDenominator { context } => write!(f, "zero denominator: {context}"),
            Error::NonRealParameter => write!(f, "operation requires real parameters"),
            Error::NotPhysical => write!(f, "binding is outside the physical parameter range"),
            Error::NotIdQm => write!(f, "operation applies only to difference (idQM) families"),
            Error::IndexOutOfRange => write!(f, "zero index out of range"),
            Error::Config { message } => write!(f, "configuration error: {message}"),
            Error::QuadratureNonConvergence { achieved, required } => {
                write!(f, "quadrature did not converge: achieved {achieved:e}, required {required:e}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
