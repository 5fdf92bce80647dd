//! The catalog of two-qubit key-distribution schemes whose security rests
//! on the no-cloning of orthogonal composite states.
//!
//! Every protocol here encodes a classical label into one of several
//! mutually orthogonal states of a qubit pair that is released one qubit
//! at a time, and decodes with a fixed projective measurement on the
//! reassembled pair. The catalog:
//!
//! * `ki` ([`make_koashi_imoto`]) — two entangled states
//!   `cos α|0,1⟩ + sin α|1,0⟩` and `sin α|0,1⟩ − cos α|1,0⟩`. The angle
//!   interpolates between trivially clonable extremes (`α = 0, π/2`:
//!   orthogonal first-qubit reductions; `α = π/4`: identical reductions)
//!   and the protected middle where neither holds.
//! * `gv` ([`make_goldenberg_vaidman`]) — the `α = π/4` pair plus the
//!   product state `|0,0⟩` used as a check signal.
//! * `bb84` ([`make_bb84_composite`]) — the four standard single-qubit
//!   signal states bundled, basis bit and all, into two orthogonal
//!   *mixed* two-qubit states (the second qubit records the basis).
//! * `minimal-pure` / `minimal-mixed` ([`make_minimal_pure`],
//!   [`make_minimal_mixed`]) — key states `|0,0⟩`, `|1,0⟩` guarded by a
//!   third orthogonal signal (`|0ˣ,1⟩`, or its equal mixture with
//!   `|1ˣ,1⟩`) that exists only to defeat cloning.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cloneability::StateSet;
use crate::error::{Error, Result};
use crate::qlinalg::{tol, ComplexMatrix, DensityMatrix, PureState};

/// A single-qubit orthonormal basis parameterised by a rotation angle:
/// `{cos θ|0⟩ + sin θ|1⟩, −sin θ|0⟩ + cos θ|1⟩}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BasisSpec {
    theta: f64,
}

impl BasisSpec {
    /// Basis at angle `theta` (radians).
    pub fn new(theta: f64) -> Self {
        BasisSpec { theta }
    }

    /// The computational basis (`θ = 0`).
    pub fn z() -> Self {
        Self::new(0.0)
    }

    /// The diagonal basis (`θ = π/4`).
    pub fn x() -> Self {
        Self::new(std::f64::consts::FRAC_PI_4)
    }

    /// The intermediate basis halfway between `z` and `x` (`θ = π/8`),
    /// the optimal single basis for eavesdropping on the four standard
    /// signal states.
    pub fn breidbart() -> Self {
        Self::new(std::f64::consts::FRAC_PI_8)
    }

    /// The rotation angle.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// The two basis vectors as qubit amplitude pairs.
    pub fn vectors(&self) -> [[Complex64; 2]; 2] {
        let (c, s) = (self.theta.cos(), self.theta.sin());
        [
            [Complex64::new(c, 0.0), Complex64::new(s, 0.0)],
            [Complex64::new(-s, 0.0), Complex64::new(c, 0.0)],
        ]
    }

    /// The two basis states as single-qubit pure states.
    pub fn states(&self) -> (PureState, PureState) {
        let [v0, v1] = self.vectors();
        (
            PureState::new(vec![2], v0.to_vec()).expect("basis vector is normalised"),
            PureState::new(vec![2], v1.to_vec()).expect("basis vector is normalised"),
        )
    }
}

/// Whether a label carries key material or only guards the channel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelRole {
    Key,
    Check,
}

/// How a label's state is prepared: as an explicit pure vector or as a
/// mixed density matrix. Keeping the pure form (when one exists) lets
/// downstream code use exact vector arithmetic.
#[derive(Clone, Debug)]
pub enum StatePrep {
    Pure(PureState),
    Mixed(DensityMatrix),
}

impl StatePrep {
    /// The prepared state as a density matrix.
    pub fn density(&self) -> DensityMatrix {
        match self {
            StatePrep::Pure(psi) => psi.to_density(),
            StatePrep::Mixed(rho) => rho.clone(),
        }
    }

    /// The underlying pure vector, when the preparation is pure.
    pub fn as_pure(&self) -> Option<&PureState> {
        match self {
            StatePrep::Pure(psi) => Some(psi),
            StatePrep::Mixed(_) => None,
        }
    }

    /// Factor dimensions of the prepared state.
    pub fn dims(&self) -> &[usize] {
        match self {
            StatePrep::Pure(psi) => psi.dims(),
            StatePrep::Mixed(rho) => rho.dims(),
        }
    }
}

/// One catalog entry: a label, its role, and its preparation.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: String,
    pub role: LabelRole,
    pub prep: StatePrep,
}

/// What a decode projector reports when it fires.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeOutcome {
    /// Decoded as this label.
    Label(String),
    /// Outside every signal subspace: the receiver discards the round.
    Reject,
}

/// One element of the receiver's projective measurement.
#[derive(Clone, Debug)]
pub struct DecodeProjector {
    pub outcome: DecodeOutcome,
    pub projector: ComplexMatrix,
}

/// Identifies a catalog protocol (and its parameter, for `ki`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProtocolKind {
    Ki,
    Gv,
    Bb84,
    MinimalPure,
    MinimalMixed,
}

impl ProtocolKind {
    /// All catalog kinds, in listing order.
    pub const ALL: [ProtocolKind; 5] = [
        ProtocolKind::Ki,
        ProtocolKind::Gv,
        ProtocolKind::Bb84,
        ProtocolKind::MinimalPure,
        ProtocolKind::MinimalMixed,
    ];

    /// The command-line name.
    pub fn name(&self) -> &'static str {
        match self {
            ProtocolKind::Ki => "ki",
            ProtocolKind::Gv => "gv",
            ProtocolKind::Bb84 => "bb84",
            ProtocolKind::MinimalPure => "minimal-pure",
            ProtocolKind::MinimalMixed => "minimal-mixed",
        }
    }

    /// One-line description for listings.
    pub fn describe(&self) -> &'static str {
        match self {
            ProtocolKind::Ki => {
                "two orthogonal entangled states cos α|0,1⟩+sin α|1,0⟩ / sin α|0,1⟩−cos α|1,0⟩ (requires --alpha)"
            }
            ProtocolKind::Gv => "the α=π/4 entangled pair plus the product check state |0,0⟩",
            ProtocolKind::Bb84 => {
                "the four standard signal states bundled into two orthogonal mixed two-qubit states"
            }
            ProtocolKind::MinimalPure => {
                "key states |0,0⟩ and |1,0⟩ guarded by the pure check state |0ˣ,1⟩"
            }
            ProtocolKind::MinimalMixed => {
                "key states |0,0⟩ and |1,0⟩ guarded by the mixed check state (I/2)⊗|1⟩⟨1|"
            }
        }
    }
}

impl fmt::Display for ProtocolKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProtocolKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProtocolKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "unknown protocol `{}` (expected one of: {})",
                    s,
                    ProtocolKind::ALL.map(|k| k.name()).join(", ")
                ))
            })
    }
}

/// A fully specified protocol: labelled signal states over `[d₁, d₂]`
/// released first-factor-first, plus the receiver's decode measurement.
#[derive(Clone, Debug)]
pub struct Protocol {
    kind: ProtocolKind,
    alpha: Option<f64>,
    dims: Vec<usize>,
    entries: Vec<CatalogEntry>,
    decode: Vec<DecodeProjector>,
    metadata: BTreeMap<String, String>,
}

impl Protocol {
    /// Validates internal consistency and wraps the parts into a protocol.
    ///
    /// Checks: states live on `dims` and are pairwise orthogonal; decode
    /// projectors are Hermitian idempotents, pairwise orthogonal, and
    /// complete (sum to identity); decoding is faithful (each label's
    /// state is recovered with probability 1 on a clean channel).
    fn validated(
        kind: ProtocolKind,
        alpha: Option<f64>,
        dims: Vec<usize>,
        entries: Vec<CatalogEntry>,
        decode: Vec<DecodeProjector>,
        metadata: BTreeMap<String, String>,
    ) -> Result<Self> {
        let total: usize = dims.iter().product();
        for entry in &entries {
            if entry.prep.dims() != dims.as_slice() {
                return Err(Error::DimensionMismatch(format!(
                    "state `{}` lives on {:?}, protocol declares {:?}",
                    entry.label,
                    entry.prep.dims(),
                    dims
                )));
            }
        }
        for i in 0..entries.len() {
            for j in (i + 1)..entries.len() {
                let ov = crate::qlinalg::overlap(&entries[i].prep.density(), &entries[j].prep.density())?;
                if ov.abs() > tol::CLASSIFY {
                    return Err(Error::NotOrthogonalInput(format!(
                        "`{}` and `{}` have overlap {:.3e}",
                        entries[i].label, entries[j].label, ov
                    )));
                }
            }
        }

        let mut sum = ComplexMatrix::zeros(total, total);
        for (i, dp) in decode.iter().enumerate() {
            let p = &dp.projector;
            if !p.is_square() || p.rows() != total {
                return Err(Error::DimensionMismatch(format!(
                    "decode projector {} has shape {}×{}, expected {}×{}",
                    i,
                    p.rows(),
                    p.cols(),
                    total,
                    total
                )));
            }
            if !p.is_hermitian(tol::EQUALITY) || (&(p * p) - p).max_abs() > tol::EQUALITY {
                return Err(Error::InvalidArgument(format!(
                    "decode element {} is not a projector",
                    i
                )));
            }
            for other in &decode[..i] {
                if (p * &other.projector).max_abs() > tol::EQUALITY {
                    return Err(Error::InvalidArgument(format!(
                        "decode element {} overlaps an earlier one",
                        i
                    )));
                }
            }
            if let DecodeOutcome::Label(l) = &dp.outcome {
                if !entries.iter().any(|e| &e.label == l) {
                    return Err(Error::UnknownLabel(l.clone()));
                }
            }
            sum = &sum + p;
        }
        if sum.max_abs_diff(&ComplexMatrix::identity(total)) > tol::EQUALITY {
            return Err(Error::InvalidArgument(
                "decode projectors do not sum to the identity".into(),
            ));
        }
        for entry in &entries {
            let rho = entry.prep.density();
            let correct: f64 = decode
                .iter()
                .filter(|dp| dp.outcome == DecodeOutcome::Label(entry.label.clone()))
                .map(|dp| (&dp.projector * rho.matrix()).trace().re)
                .sum();
            if correct < 1.0 - tol::CLASSIFY {
                return Err(Error::InvalidArgument(format!(
                    "decoding `{}` on a clean channel succeeds with probability {:.12}",
                    entry.label, correct
                )));
            }
        }

        Ok(Protocol {
            kind,
            alpha,
            dims,
            entries,
            decode,
            metadata,
        })
    }

    /// Which catalog protocol this is.
    pub fn kind(&self) -> ProtocolKind {
        self.kind
    }

    /// The command-line name.
    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    /// The angle parameter, for the protocols that have one.
    pub fn alpha(&self) -> Option<f64> {
        self.alpha
    }

    /// Factor dimensions (always `[2, 2]` in the catalog).
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// The labelled signal states.
    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    /// The receiver's measurement.
    pub fn decode(&self) -> &[DecodeProjector] {
        &self.decode
    }

    /// Notes about the construction (e.g. mixture normalisation).
    pub fn metadata(&self) -> &BTreeMap<String, String> {
        &self.metadata
    }

    /// Parameters as a stable, order-deterministic map (used in reports).
    pub fn params(&self) -> BTreeMap<String, String> {
        let mut map = BTreeMap::new();
        if let Some(alpha) = self.alpha {
            map.insert("alpha".to_string(), crate::report_float(alpha));
        }
        map
    }

    /// The catalog entry for a label.
    pub fn entry(&self, label: &str) -> Result<&CatalogEntry> {
        self.entries
            .iter()
            .find(|e| e.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    /// The encoded state for a label.
    pub fn encode(&self, label: &str) -> Result<DensityMatrix> {
        Ok(self.entry(label)?.prep.density())
    }

    /// All labels, in catalog order.
    pub fn labels(&self) -> Vec<&str> {
        self.entries.iter().map(|e| e.label.as_str()).collect()
    }

    /// Labels that carry key bits.
    pub fn key_labels(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| e.role == LabelRole::Key)
            .map(|e| e.label.as_str())
            .collect()
    }

    /// Labels that only guard the channel.
    pub fn check_labels(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| e.role == LabelRole::Check)
            .map(|e| e.label.as_str())
            .collect()
    }

    /// The protocol's signal states as a classifiable state set
    /// (released first-factor-first).
    pub fn state_set(&self) -> StateSet {
        StateSet::new(
            self.dims.clone(),
            self.entries
                .iter()
                .map(|e| (e.label.clone(), e.prep.density()))
                .collect(),
            (1..=self.dims.len()).collect(),
        )
        .expect("catalog states form a valid set")
    }
}

fn qubit_pair(
    c0: f64,
    digits0: [usize; 2],
    c1: f64,
    digits1: [usize; 2],
) -> PureState {
    PureState::superposition(
        &[2, 2],
        &[
            (Complex64::new(c0, 0.0), &digits0[..]),
            (Complex64::new(c1, 0.0), &digits1[..]),
        ],
    )
    .expect("two-term qubit-pair superposition with unit norm")
}

fn projector_onto(states: &[&PureState]) -> ComplexMatrix {
    let dim = states[0].total_dim();
    let mut p = ComplexMatrix::zeros(dim, dim);
    for s in states {
        p = &p + &s.outer();
    }
    p
}

fn complement(projectors: &[&ComplexMatrix], dim: usize) -> ComplexMatrix {
    let mut rest = ComplexMatrix::identity(dim);
    for p in projectors {
        rest = &rest - *p;
    }
    rest
}

/// The two-state entangled-carrier scheme at angle `alpha ∈ [0, π/2]`:
/// label 0 ↦ `cos α|0,1⟩ + sin α|1,0⟩`, label 1 ↦ `sin α|0,1⟩ − cos α|1,0⟩`.
///
/// The receiver projects onto each signal state and rejects the
/// two-dimensional remainder (`|0,0⟩`, `|1,1⟩` never occur legitimately).
pub fn make_koashi_imoto(alpha: f64) -> Result<Protocol> {
    if !alpha.is_finite() || !(0.0..=std::f64::consts::FRAC_PI_2).contains(&alpha) {
        return Err(Error::InvalidArgument(format!(
            "alpha = {} outside [0, π/2]",
            alpha
        )));
    }
    let (ca, sa) = (alpha.cos(), alpha.sin());
    let psi0 = qubit_pair(ca, [0, 1], sa, [1, 0]);
    let psi1 = qubit_pair(sa, [0, 1], -ca, [1, 0]);
    let p0 = psi0.outer();
    let p1 = psi1.outer();
    let rest = complement(&[&p0, &p1], 4);
    let protocol = Protocol::validated(
        ProtocolKind::Ki,
        Some(alpha),
        vec![2, 2],
        vec![
            CatalogEntry {
                label: "0".into(),
                role: LabelRole::Key,
                prep: StatePrep::Pure(psi0),
            },
            CatalogEntry {
                label: "1".into(),
                role: LabelRole::Key,
                prep: StatePrep::Pure(psi1),
            },
        ],
        vec![
            DecodeProjector {
                outcome: DecodeOutcome::Label("0".into()),
                projector: p0,
            },
            DecodeProjector {
                outcome: DecodeOutcome::Label("1".into()),
                projector: p1,
            },
            DecodeProjector {
                outcome: DecodeOutcome::Reject,
                projector: rest,
            },
        ],
        BTreeMap::new(),
    );
    Ok(protocol.expect("two-state catalog protocol is internally consistent"))
}

/// The three-state scheme: the `α = π/4` entangled pair carrying the key
/// plus the product state `|0,0⟩` as label 2, kept only to catch
/// tampering.
pub fn make_goldenberg_vaidman() -> Protocol {
    let h = 0.5f64.sqrt();
    let psi0 = qubit_pair(h, [0, 1], h, [1, 0]);
    let psi1 = qubit_pair(h, [0, 1], -h, [1, 0]);
    let psi2 = PureState::basis(&[2, 2], &[0, 0]).expect("basis state");
    let p0 = psi0.outer();
    let p1 = psi1.outer();
    let p2 = psi2.outer();
    let rest = complement(&[&p0, &p1, &p2], 4);
    Protocol::validated(
        ProtocolKind::Gv,
        None,
        vec![2, 2],
        vec![
            CatalogEntry {
                label: "0".into(),
                role: LabelRole::Key,
                prep: StatePrep::Pure(psi0),
            },
            CatalogEntry {
                label: "1".into(),
                role: LabelRole::Key,
                prep: StatePrep::Pure(psi1),
            },
            CatalogEntry {
                label: "2".into(),
                role: LabelRole::Check,
                prep: StatePrep::Pure(psi2),
            },
        ],
        vec![
            DecodeProjector {
                outcome: DecodeOutcome::Label("0".into()),
                projector: p0,
            },
            DecodeProjector {
                outcome: DecodeOutcome::Label("1".into()),
                projector: p1,
            },
            DecodeProjector {
                outcome: DecodeOutcome::Label("2".into()),
                projector: p2,
            },
            DecodeProjector {
                outcome: DecodeOutcome::Reject,
                projector: rest,
            },
        ],
        BTreeMap::new(),
    )
    .expect("three-state catalog protocol is internally consistent")
}

/// The four standard signal states regrouped by key bit into two
/// orthogonal mixed states: label p ↦ ½(|p,0⟩⟨p,0| + |pˣ,1⟩⟨pˣ,1|),
/// where the second qubit records which basis carried the bit.
///
/// The two mixtures are orthogonal *as composite states* even though no
/// single-qubit pair of signals is, which is what puts this protocol in
/// the same family as the entangled-carrier schemes. Decoding measures
/// the basis qubit, then the data qubit in the announced basis — as a
/// projector pair this is complete, so there is no reject outcome.
pub fn make_bb84_composite() -> Protocol {
    let h = 0.5f64.sqrt();
    let zero_z = PureState::basis(&[2, 2], &[0, 0]).expect("basis state");
    let one_z = PureState::basis(&[2, 2], &[1, 0]).expect("basis state");
    let zero_x = qubit_pair(h, [0, 1], h, [1, 1]);
    let one_x = qubit_pair(h, [0, 1], -h, [1, 1]);
    let chi0 = DensityMatrix::mixture(&[(1.0, &zero_z.to_density()), (1.0, &zero_x.to_density())])
        .expect("equal mixture of orthogonal pure states");
    let chi1 = DensityMatrix::mixture(&[(1.0, &one_z.to_density()), (1.0, &one_x.to_density())])
        .expect("equal mixture of orthogonal pure states");
    let p0 = projector_onto(&[&zero_z, &zero_x]);
    let p1 = projector_onto(&[&one_z, &one_x]);
    let mut metadata = BTreeMap::new();
    metadata.insert(
        "mixture_normalisation".into(),
        "each label is an equal two-component mixture; written unnormalised as a sum of two \
         projectors, it carries an overall factor 1/2 here"
            .into(),
    );
    Protocol::validated(
        ProtocolKind::Bb84,
        None,
        vec![2, 2],
        vec![
            CatalogEntry {
                label: "0".into(),
                role: LabelRole::Key,
                prep: StatePrep::Mixed(chi0),
            },
            CatalogEntry {
                label: "1".into(),
                role: LabelRole::Key,
                prep: StatePrep::Mixed(chi1),
            },
        ],
        vec![
            DecodeProjector {
                outcome: DecodeOutcome::Label("0".into()),
                projector: p0,
            },
            DecodeProjector {
                outcome: DecodeOutcome::Label("1".into()),
                projector: p1,
            },
        ],
        metadata,
    )
    .expect("composite-mixed catalog protocol is internally consistent")
}

/// The smallest pure-state scheme: key states `|0,0⟩` and `|1,0⟩`
/// (clonable on their own) plus the check state `|0ˣ,1⟩` whose only job
/// is to make the *set* unclonable.
pub fn make_minimal_pure() -> Protocol {
    let h = 0.5f64.sqrt();
    let phi0 = PureState::basis(&[2, 2], &[0, 0]).expect("basis state");
    let phi1 = PureState::basis(&[2, 2], &[1, 0]).expect("basis state");
    let phi2 = qubit_pair(h, [0, 1], h, [1, 1]);
    let p0 = phi0.outer();
    let p1 = phi1.outer();
    let p2 = phi2.outer();
    let rest = complement(&[&p0, &p1, &p2], 4);
    Protocol::validated(
        ProtocolKind::MinimalPure,
        None,
        vec![2, 2],
        vec![
            CatalogEntry {
                label: "0".into(),
                role: LabelRole::Key,
                prep: StatePrep::Pure(phi0),
            },
            CatalogEntry {
                label: "1".into(),
                role: LabelRole::Key,
                prep: StatePrep::Pure(phi1),
            },
            CatalogEntry {
                label: "2".into(),
                role: LabelRole::Check,
                prep: StatePrep::Pure(phi2),
            },
        ],
        vec![
            DecodeProjector {
                outcome: DecodeOutcome::Label("0".into()),
                projector: p0,
            },
            DecodeProjector {
                outcome: DecodeOutcome::Label("1".into()),
                projector: p1,
            },
            DecodeProjector {
                outcome: DecodeOutcome::Label("2".into()),
                projector: p2,
            },
            DecodeProjector {
                outcome: DecodeOutcome::Reject,
                projector: rest,
            },
        ],
        BTreeMap::new(),
    )
    .expect("minimal pure catalog protocol is internally consistent")
}

/// The mixed variant of the minimal scheme: the check label is the equal
/// mixture of `|0ˣ,1⟩` and `|1ˣ,1⟩`, i.e. `(I/2) ⊗ |1⟩⟨1|` — the second
/// qubit alone announces "check round". The decode measurement needs only
/// the support projector of the mixture, which completes the measurement
/// exactly (no reject outcome).
pub fn make_minimal_mixed() -> Protocol {
    let h = 0.5f64.sqrt();
    let phi0 = PureState::basis(&[2, 2], &[0, 0]).expect("basis state");
    let phi1 = PureState::basis(&[2, 2], &[1, 0]).expect("basis state");
    let chi2_a = qubit_pair(h, [0, 1], h, [1, 1]);
    let chi2_b = qubit_pair(h, [0, 1], -h, [1, 1]);
    let chi2 = DensityMatrix::mixture(&[(1.0, &chi2_a.to_density()), (1.0, &chi2_b.to_density())])
        .expect("equal mixture of orthogonal pure states");
    let p0 = phi0.outer();
    let p1 = phi1.outer();
    let p2 = projector_onto(&[&chi2_a, &chi2_b]);
    let mut metadata = BTreeMap::new();
    metadata.insert(
        "mixture_normalisation".into(),
        "the check label is an equal two-component mixture; written unnormalised as a sum of \
         two projectors, it carries an overall factor 1/2 here"
            .into(),
    );
    Protocol::validated(
        ProtocolKind::MinimalMixed,
        None,
        vec![2, 2],
        vec![
            CatalogEntry {
                label: "0".into(),
                role: LabelRole::Key,
                prep: StatePrep::Pure(phi0),
            },
            CatalogEntry {
                label: "1".into(),
                role: LabelRole::Key,
                prep: StatePrep::Pure(phi1),
            },
            CatalogEntry {
                label: "2".into(),
                role: LabelRole::Check,
                prep: StatePrep::Mixed(chi2),
            },
        ],
        vec![
            DecodeProjector {
                outcome: DecodeOutcome::Label("0".into()),
                projector: p0,
            },
            DecodeProjector {
                outcome: DecodeOutcome::Label("1".into()),
                projector: p1,
            },
            DecodeProjector {
                outcome: DecodeOutcome::Label("2".into()),
                projector: p2,
            },
        ],
        metadata,
    )
    .expect("minimal mixed catalog protocol is internally consistent")
}

/// Builds a catalog protocol from its kind; `ki` requires `alpha`.
pub fn make_protocol(kind: ProtocolKind, alpha: Option<f64>) -> Result<Protocol> {
    match (kind, alpha) {
        (ProtocolKind::Ki, Some(a)) => make_koashi_imoto(a),
        (ProtocolKind::Ki, None) => Err(Error::InvalidArgument(
            "protocol `ki` requires --alpha".into(),
        )),
        (other, Some(_)) => Err(Error::InvalidArgument(format!(
            "protocol `{}` takes no --alpha",
            other.name()
        ))),
        (ProtocolKind::Gv, None) => Ok(make_goldenberg_vaidman()),
        (ProtocolKind::Bb84, None) => Ok(make_bb84_composite()),
        (ProtocolKind::MinimalPure, None) => Ok(make_minimal_pure()),
        (ProtocolKind::MinimalMixed, None) => Ok(make_minimal_mixed()),
    }
}
