//! JSON interchange for labelled state sets.
//!
//! The document shape:
//!
//! ```json
//! {
//!   "dims": [2, 2],
//!   "states": [
//!     {"label": "0", "kind": "pure",
//!      "amplitudes_re": [0.0, 0.866, 0.5, 0.0],
//!      "amplitudes_im": [0.0, 0.0, 0.0, 0.0]},
//!     {"label": "2", "kind": "mixed",
//!      "matrix_re": [[...], ...], "matrix_im": [[...], ...]}
//!   ],
//!   "release_order": [1, 2]
//! }
//! ```
//!
//! Complex data is split into separate real and imaginary arrays so the
//! format stays plain JSON with no dialect for complex literals. Basis
//! ordering is big-endian in the factor list: for `dims = [2, 2]` the
//! amplitude index of `|a, b⟩` is `2·a + b`, i.e. the *first* factor is
//! the most significant digit. `release_order` lists 1-based subsystem
//! positions in the order they leave the sender.
//!
//! Parsing reports failures with a field path (for example
//! `states[1].matrix_re: row 2 has length 3, expected 4`), and every
//! parsed state passes the full density-matrix or pure-state
//! validation. Serialisation writes shortest round-trip floats, so an
//! exported set re-parses to entrywise-identical matrices.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cloneability::StateSet;
use crate::error::{Error, Result};
use crate::protocols::{Protocol, StatePrep};
use crate::qlinalg::{ComplexMatrix, DensityMatrix, PureState};

/// How one state is written in the file.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    Pure,
    Mixed,
}

/// One labelled state as stored in the document.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StateEntryFile {
    pub label: String,
    pub kind: StateKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitudes_re: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitudes_im: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix_re: Option<Vec<Vec<f64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix_im: Option<Vec<Vec<f64>>>,
}

/// The whole state-set document.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StateSetFile {
    pub dims: Vec<usize>,
    pub states: Vec<StateEntryFile>,
    pub release_order: Vec<usize>,
}

fn field_err(path: &str, message: impl Into<String>) -> Error {
    Error::format(path, message.into())
}

fn finite_or_err(values: &[f64], path: &str) -> Result<()> {
    if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
        return Err(field_err(
            path,
            format!("entry {} is not a finite number", pos),
        ));
    }
    Ok(())
}

fn vector_field<'v>(
    field: &'v Option<Vec<f64>>,
    expected_len: usize,
    path: &str,
) -> Result<&'v [f64]> {
    let values = field
        .as_deref()
        .ok_or_else(|| field_err(path, "missing for kind \"pure\""))?;
    if values.len() != expected_len {
        return Err(field_err(
            path,
            format!("length {} does not match dims product {}", values.len(), expected_len),
        ));
    }
    finite_or_err(values, path)?;
    Ok(values)
}

fn matrix_field<'v>(
    field: &'v Option<Vec<Vec<f64>>>,
    expected_dim: usize,
    path: &str,
) -> Result<&'v Vec<Vec<f64>>> {
    let rows = field
        .as_ref()
        .ok_or_else(|| field_err(path, "missing for kind \"mixed\""))?;
    if rows.len() != expected_dim {
        return Err(field_err(
            path,
            format!("has {} rows, expected {}", rows.len(), expected_dim),
        ));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != expected_dim {
            return Err(field_err(
                path,
                format!("row {} has length {}, expected {}", i, row.len(), expected_dim),
            ));
        }
        finite_or_err(row, path)?;
    }
    Ok(rows)
}

fn forbid(present: bool, path: &str, kind: &str) -> Result<()> {
    if present {
        return Err(field_err(path, format!("not allowed for kind \"{}\"", kind)));
    }
    Ok(())
}

impl StateSetFile {
    /// Validates the document and builds the in-memory [`StateSet`]
    /// (which re-checks labels, dimensions, and the release order).
    pub fn to_state_set(&self) -> Result<StateSet> {
        if self.dims.is_empty() {
            return Err(field_err("dims", "must list at least one subsystem"));
        }
        if let Some(pos) = self.dims.iter().position(|&d| d == 0) {
            return Err(field_err("dims", format!("dimension {} is zero", pos)));
        }
        let total: usize = self.dims.iter().product();
        let mut entries = Vec::with_capacity(self.states.len());
        for (i, state) in self.states.iter().enumerate() {
            let at = |field: &str| format!("states[{}].{}", i, field);
            let density = match state.kind {
                StateKind::Pure => {
                    forbid(state.matrix_re.is_some(), &at("matrix_re"), "pure")?;
                    forbid(state.matrix_im.is_some(), &at("matrix_im"), "pure")?;
                    let re = vector_field(&state.amplitudes_re, total, &at("amplitudes_re"))?;
                    let im = vector_field(&state.amplitudes_im, total, &at("amplitudes_im"))?;
                    let amplitudes: Vec<Complex64> = re
                        .iter()
                        .zip(im)
                        .map(|(r, m)| Complex64::new(*r, *m))
                        .collect();
                    PureState::new(self.dims.clone(), amplitudes)
                        .map_err(|e| field_err(&at("amplitudes_re"), e.to_string()))?
                        .to_density()
                }
                StateKind::Mixed => {
                    forbid(state.amplitudes_re.is_some(), &at("amplitudes_re"), "mixed")?;
                    forbid(state.amplitudes_im.is_some(), &at("amplitudes_im"), "mixed")?;
                    let re = matrix_field(&state.matrix_re, total, &at("matrix_re"))?;
                    let im = matrix_field(&state.matrix_im, total, &at("matrix_im"))?;
                    let matrix = ComplexMatrix::from_fn(total, total, |r, c| {
                        Complex64::new(re[r][c], im[r][c])
                    });
                    DensityMatrix::new(self.dims.clone(), matrix)
                        .map_err(|e| field_err(&at("matrix_re"), e.to_string()))?
                }
            };
            entries.push((state.label.clone(), density));
        }
        StateSet::new(self.dims.clone(), entries, self.release_order.clone())
    }

    /// Renders a [`StateSet`] as a document; every state is written in
    /// matrix form (a bare `StateSet` no longer knows which states came
    /// from vectors).
    pub fn from_state_set(set: &StateSet) -> Self {
        StateSetFile {
            dims: set.dims().to_vec(),
            states: set
                .entries()
                .iter()
                .map(|(label, rho)| mixed_entry(label, rho))
                .collect(),
            release_order: set.release_order().to_vec(),
        }
    }

    /// Renders a protocol's signal catalog as a document, keeping pure
    /// states in amplitude form.
    pub fn from_protocol(protocol: &Protocol) -> Self {
        StateSetFile {
            dims: protocol.dims().to_vec(),
            states: protocol
                .entries()
                .iter()
                .map(|entry| match &entry.prep {
                    StatePrep::Pure(psi) => StateEntryFile {
                        label: entry.label.clone(),
                        kind: StateKind::Pure,
                        amplitudes_re: Some(psi.amplitudes().iter().map(|z| z.re).collect()),
                        amplitudes_im: Some(psi.amplitudes().iter().map(|z| z.im).collect()),
                        matrix_re: None,
                        matrix_im: None,
                    },
                    StatePrep::Mixed(rho) => mixed_entry(&entry.label, rho),
                })
                .collect(),
            release_order: (1..=protocol.dims().len()).collect(),
        }
    }
}

fn mixed_entry(label: &str, rho: &DensityMatrix) -> StateEntryFile {
    let n = rho.total_dim();
    let m = rho.matrix();
    StateEntryFile {
        label: label.to_string(),
        kind: StateKind::Mixed,
        amplitudes_re: None,
        amplitudes_im: None,
        matrix_re: Some((0..n).map(|r| (0..n).map(|c| m[(r, c)].re).collect()).collect()),
        matrix_im: Some((0..n).map(|r| (0..n).map(|c| m[(r, c)].im).collect()).collect()),
    }
}

/// Reads and parses a state-set document. Structural JSON errors and
/// field-level failures both carry the file's path.
pub fn read_state_set_file(path: impl AsRef<Path>) -> Result<StateSetFile> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::format(path.display().to_string(), e.to_string()))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::format(path.display().to_string(), e.to_string()))
}

/// Reads, parses, and validates a document into a [`StateSet`],
/// prefixing field-path errors with the file's path.
pub fn load_state_set(path: impl AsRef<Path>) -> Result<StateSet> {
    let path = path.as_ref();
    read_state_set_file(path)?.to_state_set().map_err(|e| match e {
        Error::Format { path: field, message } => {
            Error::format(format!("{}: {}", path.display(), field), message)
        }
        other => other,
    })
}

/// Writes a document as stable, human-diffable JSON (two-space
/// indentation, trailing newline).
pub fn save_state_set_file(path: impl AsRef<Path>, file: &StateSetFile) -> Result<()> {
    let path = path.as_ref();
    let mut text = serde_json::to_string_pretty(file)
        .map_err(|e| Error::format(path.display().to_string(), e.to_string()))?;
    text.push('\n');
    std::fs::write(path, text)
        .map_err(|e| Error::format(path.display().to_string(), e.to_string()))
}
