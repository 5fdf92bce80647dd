//! Exact dense linear algebra for small multipartite quantum systems.
//!
//! Everything here works on explicit complex matrices over a tensor product
//! of finite-dimensional factors. Dimensions stay tiny (total dimension a
//! few dozen at most), so all routines favour exactness and auditability
//! over asymptotic speed: dense storage, `f64` complex arithmetic, and a
//! Jacobi eigensolver with no external numerical dependencies.
//!
//! Index convention: basis states of a tensor product are enumerated
//! big-endian, i.e. the **first factor is the most significant digit**.
//! For factor dimensions `[2, 2]`, index 1 is `|0,1⟩` and index 2 is
//! `|1,0⟩`. Factor indices in this API are 0-based; user-facing layers
//! (JSON files, reports) speak of 1-based "subsystems" and convert at the
//! boundary.

mod eig;
mod matrix;
mod metrics;
mod state;

pub use eig::{eig_hermitian, simultaneous_eigenbasis, EigDecomposition};
pub use matrix::{embed_operator, swap_factors, ComplexMatrix};
pub use metrics::{
    commutes, commutes_with_tol, fidelity, fidelity_pure, helstrom_guess, helstrom_projector,
    is_identical, is_identical_with_tol, is_orthogonal, is_orthogonal_with_tol, overlap,
    trace_distance,
};
pub use state::{partial_trace, DensityMatrix, PureState};

/// Numerical tolerances used throughout the crate.
///
/// Two regimes are kept deliberately distinct:
///
/// * [`tol::EQUALITY`] — tolerance for *value* comparisons (traces,
///   fidelities, unitarity and Hermiticity checks).
/// * [`tol::CLASSIFY`] — looser tolerance for *classification predicates*
///   (orthogonality, state identity, commutation). Predicates quantise a
///   continuum into discrete verdicts, so they get their own knob; the
///   test suite checks that verdicts on the built-in catalog are stable
///   when this tolerance is halved.
pub mod tol {
    /// Equality tolerance for scalar and entrywise value checks.
    pub const EQUALITY: f64 = 1e-10;

    /// Decision tolerance for classification predicates.
    pub const CLASSIFY: f64 = 1e-9;

    /// Convergence threshold for the Jacobi eigensolver: iteration stops
    /// once the off-diagonal Frobenius norm falls below this.
    pub const EIG_OFF_DIAGONAL: f64 = 1e-12;

    /// Eigendecompositions must reproduce their input to this accuracy.
    pub const EIG_RECONSTRUCT: f64 = 1e-9;

    /// Eigenvalues below this threshold are treated as zero when a
    /// numerical rank or support is needed.
    pub const RANK: f64 = 1e-9;
}
