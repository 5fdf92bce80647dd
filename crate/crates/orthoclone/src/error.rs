//! Crate-wide error type.
//!
//! Every fallible operation in this crate returns [`Result`]. Variants are
//! grouped by the layer that raises them: linear-algebra preconditions,
//! state validation, classification preconditions, attack wiring, and I/O.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes surfaced by this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Operands have incompatible shapes or tensor dimensions.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A parameter is outside its documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A matrix expected to be Hermitian is not, within tolerance.
    #[error("matrix is not Hermitian (max deviation {deviation:.3e})")]
    NotHermitian {
        /// Largest absolute entry of `M - M†`.
        deviation: f64,
    },

    /// A matrix expected to be unitary is not, within tolerance.
    #[error("matrix is not unitary (max deviation {deviation:.3e})")]
    NotUnitary {
        /// Largest absolute entry of `U†U - I`.
        deviation: f64,
    },

    /// A matrix failed density-matrix validation (trace, Hermiticity,
    /// or positive semidefiniteness).
    #[error("not a valid density matrix: {0}")]
    InvalidState(String),

    /// A state set handed to classification contains a non-orthogonal pair.
    #[error("input states are not mutually orthogonal: {0}")]
    NotOrthogonalInput(String),

    /// A vector expected to factor across subsystems does not.
    #[error("not a product state: {0}")]
    NotProduct(String),

    /// Two product vectors are not orthogonal, so no subsystem can
    /// witness their orthogonality.
    #[error("states are not orthogonal: {0}")]
    NotOrthogonal(String),

    /// A family of reduced states does not pairwise commute, so no common
    /// eigenbasis exists.
    #[error("reduced states do not commute: {0}")]
    NonCommutingFamily(String),

    /// A structured attack was requested against a protocol that does not
    /// satisfy the attack's precondition.
    #[error("attack precondition failed: {0}")]
    PreconditionFailed(String),

    /// An interaction was wired so that it would touch a subsystem the
    /// sender has not yet released.
    #[error("schedule violation: {0}")]
    ScheduleViolation(String),

    /// The operation is defined, but not for this input shape
    /// (for example, classification of sets with more than two factors).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A label was requested that the protocol or state set does not define.
    #[error("unknown label: {0}")]
    UnknownLabel(String),

    /// A state-set file failed to parse or validate; `path` is the JSON
    /// field path of the offending element.
    #[error("invalid state-set file at `{path}`: {message}")]
    Format {
        /// JSON field path, e.g. `states[2].amplitudes_re`.
        path: String,
        /// Human-readable description of the problem.
        message: String,
    },

    /// Underlying I/O failure while reading or writing a file.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Shorthand for [`Error::Format`].
    pub(crate) fn format(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            message: message.into(),
        }
    }
}
