//! Exact analysis of clonability for orthogonal composite quantum states,
//! and simulation of the key-distribution protocols built on them.
//!
//! Two orthogonal states of a *single* system can always be distinguished
//! and therefore copied. Once the states live on *two* subsystems that are
//! released one at a time, the picture changes: orthogonality alone no
//! longer guarantees clonability, because no measurement may be able to
//! tell the states apart while only part of each is in hand. This crate
//! makes that story computable:
//!
//! * [`qlinalg`] — dense complex matrices, a self-contained Hermitian
//!   eigensolver, validated density matrices, partial traces, and state
//!   metrics (overlap, trace distance, fidelity, optimal discrimination).
//! * [`cloneability`] — classification of orthogonal state sets released
//!   subsystem-by-subsystem: clonable (and by which mechanism) or not,
//!   with a machine-checkable witness, plus a broadcastability check.
//! * [`protocols`] — a catalog of two-qubit key-distribution schemes
//!   whose security rests on non-clonability, with exact encode and
//!   decode maps.
//! * [`adversary`] — the restricted two-round eavesdropper model and a
//!   library of structured attacks (intercept–resend, broadcast,
//!   dummy-state substitution, second-subsystem measurement).
//! * [`simulator`] — exact protocol×attack evaluation producing fidelity,
//!   error-rate, and information-gain reports; parameter sweeps; and a
//!   seeded Monte Carlo mode.
//! * [`formats`] — a small JSON interchange format for state sets.
//! * [`cli`] — the command-line front end (`classify`, `simulate`,
//!   `sweep`, `list`).
//!
//! The `examples/` directory is the guided tour: each example is a
//! runnable walkthrough of one capability.

pub mod adversary;
pub mod cli;
pub mod cloneability;
pub mod error;
pub mod formats;
pub mod protocols;
pub mod qlinalg;
pub mod simulator;

pub use error::{Error, Result};
pub use qlinalg::{ComplexMatrix, DensityMatrix, PureState};

/// Formats a float for reports and CSV output: 12 significant digits,
/// scientific notation, locale-independent and stable across platforms.
pub fn report_float(x: f64) -> String {
    format!("{:.11e}", x)
}
