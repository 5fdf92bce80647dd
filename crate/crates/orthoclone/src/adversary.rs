//! The restricted eavesdropper model and a library of structured attacks.
//!
//! The eavesdropper sits on the channel while a two-factor signal is
//! released one factor at a time. She owns a private ancilla and may
//! apply one unitary per round, each acting jointly on the factor
//! currently in transit and the ancilla — never on a factor she has not
//! yet seen or has already delivered. An [`AttackChannel`] packages the
//! ancilla (dimensions and initial state, possibly mixed) with the two
//! optional round unitaries; `None` means "let the factor pass".
//!
//! Round unitaries are written on the factor order
//! `[flying factor, ancilla factors…]`; the simulator embeds them into
//! the global space and enforces that a round touches nothing else.
//!
//! The library covers the attacks the clonability taxonomy talks about:
//!
//! * [`identity_attack`] — the clean channel.
//! * [`intercept_resend`] — measure the chosen round's factor in a
//!   chosen basis, record the outcome, resend the post-measurement
//!   state. Realised coherently as a copy-in-basis unitary, which
//!   reproduces the measure-and-resend marginals exactly.
//! * [`measure_second_attack`] — the same interaction fixed to the
//!   second round, the move that breaks schemes whose second-released
//!   reductions are orthogonal.
//! * [`broadcast_attack`] — for commuting first-released reductions:
//!   copy in the joint eigenbasis (or, when all reductions are
//!   identical, simply prepare the common reduction locally and let the
//!   signal pass untouched). Both marginals of the broadcast equal the
//!   input reduction exactly.
//! * [`dummy_swap_attack`] — the perfect clone for pure signal sets with
//!   identical first reductions: swap a locally prepared dummy into the
//!   channel, identify the signal from the retained halves, and rotate
//!   the dummy's second half to match before delivering it.
//! * [`random_attack`] — seeded Haar-random round unitaries, for
//!   exploring the information/disturbance landscape.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::protocols::{BasisSpec, Protocol};
use crate::qlinalg::{
    is_identical, simultaneous_eigenbasis, swap_factors, tol, ComplexMatrix, DensityMatrix,
    PureState,
};

/// A two-round eavesdropping channel: a private ancilla plus one
/// optional unitary per round, each on `[flying factor, ancilla…]`.
#[derive(Clone, Debug)]
pub struct AttackChannel {
    name: String,
    params: BTreeMap<String, String>,
    ancilla_dims: Vec<usize>,
    ancilla_init: DensityMatrix,
    round1: Option<ComplexMatrix>,
    round2: Option<ComplexMatrix>,
}

impl AttackChannel {
    /// Validates and assembles an attack channel. The ancilla state must
    /// live on `ancilla_dims`, and every provided round matrix must be
    /// unitary. (Whether the round dimensions fit a given protocol's
    /// release schedule is checked at run time, where the protocol is
    /// known.)
    pub fn new(
        name: impl Into<String>,
        params: BTreeMap<String, String>,
        ancilla_dims: Vec<usize>,
        ancilla_init: DensityMatrix,
        round1: Option<ComplexMatrix>,
        round2: Option<ComplexMatrix>,
    ) -> Result<Self> {
        if ancilla_init.dims() != ancilla_dims.as_slice() {
            return Err(Error::DimensionMismatch(format!(
                "ancilla state lives on {:?}, declared dimensions are {:?}",
                ancilla_init.dims(),
                ancilla_dims
            )));
        }
        for (label, round) in [("round 1", &round1), ("round 2", &round2)] {
            if let Some(u) = round {
                let deviation = u.unitarity_deviation();
                if !(deviation <= tol::EQUALITY) {
                    return Err(Error::NotUnitary { deviation }).map_err(|e| {
                        Error::InvalidArgument(format!("{} operator: {}", label, e))
                    });
                }
            }
        }
        Ok(AttackChannel {
            name: name.into(),
            params,
            ancilla_dims,
            ancilla_init,
            round1,
            round2,
        })
    }

    /// The attack's catalog name.
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Parameters as a stable, order-deterministic map (used in reports).
    pub fn params(&self) -> &BTreeMap<String, String> {
        &self.params
    }

    /// Ancilla factor dimensions (empty for attacks that keep nothing).
    pub fn ancilla_dims(&self) -> &[usize] {
        &self.ancilla_dims
    }

    /// The ancilla's initial state.
    pub fn ancilla_init(&self) -> &DensityMatrix {
        &self.ancilla_init
    }

    /// The unitary applied while the first-released factor is in
    /// transit, on `[that factor, ancilla…]`; `None` lets it pass.
    pub fn round1(&self) -> Option<&ComplexMatrix> {
        self.round1.as_ref()
    }

    /// The unitary applied while the second-released factor is in
    /// transit; `None` lets it pass.
    pub fn round2(&self) -> Option<&ComplexMatrix> {
        self.round2.as_ref()
    }

    /// Total ancilla dimension (1 when there is no ancilla).
    pub fn ancilla_total_dim(&self) -> usize {
        self.ancilla_dims.iter().product()
    }
}

fn basis_params(basis: BasisSpec) -> BTreeMap<String, String> {
    let mut params = BTreeMap::new();
    params.insert("basis_theta".into(), crate::report_float(basis.theta()));
    params
}

/// The clean channel: no ancilla, both rounds pass through.
pub fn identity_attack() -> AttackChannel {
    AttackChannel::new(
        "identity",
        BTreeMap::new(),
        vec![],
        DensityMatrix::scalar(),
        None,
        None,
    )
    .expect("the clean channel is a valid attack")
}

/// The copy-in-basis unitary `Σᵢ |bᵢ⟩⟨bᵢ| ⊗ Xⁱ` on
/// `[flying qubit, ancilla qubit]`: records the basis outcome in the
/// ancilla. Tracing out either side reproduces the measure-and-resend
/// channel and the classical outcome register, respectively.
fn coherent_measure_unitary(basis: BasisSpec) -> ComplexMatrix {
    let vectors = basis.vectors();
    let flip = ComplexMatrix::from_fn(2, 2, |r, c| {
        Complex64::new(if r != c { 1.0 } else { 0.0 }, 0.0)
    });
    let record = [ComplexMatrix::identity(2), flip];
    let mut u = ComplexMatrix::zeros(4, 4);
    for (i, b) in vectors.iter().enumerate() {
        for r in 0..2 {
            for c in 0..2 {
                let proj = b[r] * b[c].conj();
                for ar in 0..2 {
                    for ac in 0..2 {
                        u[(r * 2 + ar, c * 2 + ac)] += proj * record[i][(ar, ac)];
                    }
                }
            }
        }
    }
    u
}

/// Measure the factor flying in the given round (`1` or `2`) in `basis`,
/// keep the outcome, and resend the projected state.
pub fn intercept_resend(basis: BasisSpec, round: usize) -> Result<AttackChannel> {
    if round != 1 && round != 2 {
        return Err(Error::InvalidArgument(format!(
            "round must be 1 or 2, got {}",
            round
        )));
    }
    let u = coherent_measure_unitary(basis);
    let mut params = basis_params(basis);
    params.insert("round".into(), round.to_string());
    let ancilla = PureState::basis(&[2], &[0]).expect("qubit basis state");
    AttackChannel::new(
        "intercept-resend",
        params,
        vec![2],
        ancilla.to_density(),
        (round == 1).then(|| u.clone()),
        (round == 2).then_some(u),
    )
}

/// Measure the second-released factor in `basis` and resend it: the
/// attack that defeats schemes whose second-released reductions are
/// orthogonal.
pub fn measure_second_attack(basis: BasisSpec) -> AttackChannel {
    let u = coherent_measure_unitary(basis);
    let ancilla = PureState::basis(&[2], &[0]).expect("qubit basis state");
    AttackChannel::new(
        "measure-second",
        basis_params(basis),
        vec![2],
        ancilla.to_density(),
        None,
        Some(u),
    )
    .expect("copy-in-basis unitary is valid")
}

/// The mod-`d` cyclic shift `S|j⟩ = |j+1 mod d⟩`.
fn cyclic_shift(d: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(d, d, |r, c| {
        if r == (c + 1) % d {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Broadcast the first-released factor of a label family.
///
/// `reduced_family` holds the first-released reductions, one per label,
/// all on the same single-factor space:
///
/// * all identical — the ancilla is simply *initialised* to the common
///   reduction and both rounds pass through: the signal is untouched
///   (zero disturbance) and the ancilla marginal equals every label's
///   reduction exactly (and carries no label information);
/// * commuting but not identical — copy in the joint eigenbasis
///   `{|bᵢ⟩}` via `U = (I ⊗ B) · Σᵢ |bᵢ⟩⟨bᵢ| ⊗ Sⁱ`, after which *both*
///   marginals equal the input reduction exactly, at the price of
///   decohering the flying factor in that basis;
/// * non-commuting — no broadcaster exists in this model; an error
///   ([`Error::NonCommutingFamily`]) is returned.
pub fn broadcast_attack(reduced_family: &[DensityMatrix]) -> Result<AttackChannel> {
    let first = reduced_family
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty reduction family".into()))?;
    if first.dims().len() != 1 {
        return Err(Error::Unsupported(format!(
            "broadcast expects single-factor reductions, got {:?}",
            first.dims()
        )));
    }
    let d = first.total_dim();
    for rho in reduced_family {
        if rho.dims() != first.dims() {
            return Err(Error::DimensionMismatch(format!(
                "reductions live on {:?} and {:?}",
                first.dims(),
                rho.dims()
            )));
        }
    }

    let all_identical = reduced_family
        .iter()
        .all(|rho| is_identical(rho, first).unwrap_or(false));
    if all_identical {
        let mut params = BTreeMap::new();
        params.insert("construction".into(), "local-preparation".into());
        return AttackChannel::new("broadcast", params, vec![d], first.clone(), None, None);
    }

    for i in 0..reduced_family.len() {
        for j in (i + 1)..reduced_family.len() {
            if !crate::qlinalg::commutes(&reduced_family[i], &reduced_family[j])? {
                return Err(Error::NonCommutingFamily(format!(
                    "first-released reductions {} and {} do not commute; \
                     no broadcaster exists for them",
                    i, j
                )));
            }
        }
    }

    let matrices: Vec<&ComplexMatrix> = reduced_family.iter().map(|rho| rho.matrix()).collect();
    let b = simultaneous_eigenbasis(&matrices)?;
    // Controlled shift in the joint eigenbasis: Σᵢ |bᵢ⟩⟨bᵢ| ⊗ Sⁱ.
    let mut controlled = ComplexMatrix::zeros(d * d, d * d);
    let shift = cyclic_shift(d);
    for i in 0..d {
        let bi = b.col(i);
        let mut s_pow = ComplexMatrix::identity(d);
        for _ in 0..i {
            s_pow = &shift * &s_pow;
        }
        for r in 0..d {
            for c in 0..d {
                let proj = bi[r] * bi[c].conj();
                for ar in 0..d {
                    for ac in 0..d {
                        controlled[(r * d + ar, c * d + ac)] += proj * s_pow[(ar, ac)];
                    }
                }
            }
        }
    }
    let relabel = crate::qlinalg::embed_operator(&b, &[d, d], &[1])?;
    let u = &relabel * &controlled;
    let ancilla = PureState::basis(&[d], &[0]).expect("basis state");
    let mut params = BTreeMap::new();
    params.insert("construction".into(), "eigenbasis-copy".into());
    AttackChannel::new(
        "broadcast",
        params,
        vec![d],
        ancilla.to_density(),
        Some(u),
        None,
    )
}

/// Completes an orthonormal set to a full orthonormal basis of `C^d`
/// by Gram–Schmidt against the computational vectors, deterministically.
fn complete_orthonormal(mut basis: Vec<Vec<Complex64>>, d: usize) -> Vec<Vec<Complex64>> {
    let mut candidate_index = 0;
    while basis.len() < d {
        let mut v = vec![Complex64::new(0.0, 0.0); d];
        v[candidate_index] = Complex64::new(1.0, 0.0);
        candidate_index += 1;
        for existing in &basis {
            let overlap: Complex64 = existing
                .iter()
                .zip(&v)
                .map(|(e, x)| e.conj() * x)
                .sum();
            for (x, e) in v.iter_mut().zip(existing) {
                *x -= overlap * e;
            }
        }
        let norm: f64 = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            for x in &mut v {
                *x /= norm;
            }
            basis.push(v);
        }
    }
    basis
}

/// The perfect clone for schemes whose signal states are all pure with
/// identical first-released reductions.
///
/// The eavesdropper prepares a dummy copy of one fixed signal state on a
/// private register pair `(E₃, E₄)`. Round 1 swaps the flying factor
/// with `E₃`, so the receiver will get the dummy's first half while she
/// retains the real one. During round 2 she holds the *entire* real
/// signal (retained first factor + flying second factor); because the
/// signals are orthogonal she can identify the label exactly and, controlled
/// on it, rotate `E₄` so the dummy pair matches the identified signal —
/// the rotation exists because identical first reductions make all
/// signals purifications of one state. A final swap delivers the
/// corrected dummy half. Both sides end in the exact signal state:
/// fidelity 1 for the receiver, a perfect copy for the eavesdropper.
///
/// Returns [`Error::PreconditionFailed`] when a signal state is mixed or
/// the first reductions differ.
pub fn dummy_swap_attack(protocol: &Protocol) -> Result<AttackChannel> {
    let dims = protocol.dims();
    let (d1, d2) = (dims[0], dims[1]);
    let mut pures = Vec::new();
    for entry in protocol.entries() {
        match entry.prep.as_pure() {
            Some(psi) => pures.push((entry.label.clone(), psi.clone())),
            None => {
                return Err(Error::PreconditionFailed(format!(
                    "dummy-state substitution needs pure signal states, `{}` is mixed",
                    entry.label
                )))
            }
        }
    }
    let reductions: Vec<DensityMatrix> = pures
        .iter()
        .map(|(_, psi)| psi.to_density().partial_trace(&[0]))
        .collect::<Result<_>>()?;
    for (i, rho) in reductions.iter().enumerate().skip(1) {
        if !is_identical(rho, &reductions[0])? {
            return Err(Error::PreconditionFailed(format!(
                "dummy-state substitution needs identical first-released reductions, \
                 `{}` and `{}` differ",
                pures[0].0, pures[i].0
            )));
        }
    }

    // Schmidt partners of each signal with respect to one fixed
    // eigenbasis {λᵢ, |uᵢ⟩} of the common first reduction: for λᵢ > 0,
    // |v^p_i⟩ = (⟨uᵢ| ⊗ I)|ψ_p⟩ / √λᵢ, an orthonormal set for each p.
    let eig = reductions[0].eig();
    let support: Vec<usize> = (0..d1)
        .filter(|&i| eig.eigenvalues[i] > tol::RANK)
        .collect();
    let partners: Vec<Vec<Vec<Complex64>>> = pures
        .iter()
        .map(|(_, psi)| {
            support
                .iter()
                .map(|&i| {
                    let u_i = eig.eigenvectors.col(i);
                    let amp = psi.amplitudes();
                    let scale = eig.eigenvalues[i].sqrt();
                    (0..d2)
                        .map(|j| {
                            (0..d1)
                                .map(|k| u_i[k].conj() * amp[k * d2 + j])
                                .sum::<Complex64>()
                                / scale
                        })
                        .collect()
                })
                .collect()
        })
        .collect();

    // U_p maps the dummy's partner frame onto signal p's partner frame;
    // the frames are completed to full bases so U_p is unitary.
    let reference = complete_orthonormal(partners[0].clone(), d2);
    let corrections: Vec<ComplexMatrix> = partners
        .iter()
        .map(|frame| {
            let full = complete_orthonormal(frame.clone(), d2);
            let mut u = ComplexMatrix::zeros(d2, d2);
            for (target, source) in full.iter().zip(&reference) {
                for r in 0..d2 {
                    for c in 0..d2 {
                        u[(r, c)] += target[r] * source[c].conj();
                    }
                }
            }
            u
        })
        .collect();

    // Round 1 on [flying first factor, E₃, E₄]: swap the flying factor
    // with the dummy's first half.
    let round1 = swap_factors(&[d1, d1, d2], 0, 1)?;

    // Round 2 on [flying second factor, E₃, E₄]. The retained real
    // signal sits on (E₃, flying) = (first, second factor), so the
    // identification projectors are built on the transposed amplitudes.
    let mut sum_proj = ComplexMatrix::zeros(d1 * d2, d1 * d2);
    let mut correction = ComplexMatrix::zeros(d2 * d1 * d2, d2 * d1 * d2);
    for ((_, psi), u_p) in pures.iter().zip(&corrections) {
        let amp = psi.amplitudes();
        let transposed: Vec<Complex64> = (0..d1 * d2)
            .map(|idx| amp[(idx % d1) * d2 + idx / d1])
            .collect();
        let mut proj = ComplexMatrix::zeros(d1 * d2, d1 * d2);
        for r in 0..d1 * d2 {
            for c in 0..d1 * d2 {
                proj[(r, c)] = transposed[r] * transposed[c].conj();
            }
        }
        correction = &correction + &proj.tensor(u_p);
        sum_proj = &sum_proj + &proj;
    }
    let rest = &ComplexMatrix::identity(d1 * d2) - &sum_proj;
    correction = &correction + &rest.tensor(&ComplexMatrix::identity(d2));
    let deliver = swap_factors(&[d2, d1, d2], 0, 2)?;
    let round2 = &deliver * &correction;

    let mut params = BTreeMap::new();
    params.insert("dummy_label".into(), pures[0].0.clone());
    AttackChannel::new(
        "dummy-swap",
        params,
        vec![d1, d2],
        pures[0].1.to_density(),
        Some(round1),
        Some(round2),
    )
}

/// Draws a Haar-distributed `d × d` unitary by Gram–Schmidt
/// orthonormalisation of a complex Gaussian matrix.
fn haar_unitary(d: usize, rng: &mut ChaCha20Rng) -> ComplexMatrix {
    let mut columns: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    while columns.len() < d {
        let mut v: Vec<Complex64> = (0..d)
            .map(|_| {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex64::new(re, im)
            })
            .collect();
        for q in &columns {
            let overlap: Complex64 = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
            for (x, a) in v.iter_mut().zip(q) {
                *x -= overlap * a;
            }
        }
        let norm: f64 = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            for x in &mut v {
                *x /= norm;
            }
            columns.push(v);
        }
    }
    ComplexMatrix::from_fn(d, d, |r, c| columns[c][r])
}

/// A seeded Haar-random attack against `protocol`: fresh random
/// unitaries in both rounds over an ancilla of the given shape,
/// initialised to `|0…0⟩`. The same seed always produces the same
/// attack.
pub fn random_attack(
    protocol: &Protocol,
    ancilla_dims: &[usize],
    seed: u64,
) -> Result<AttackChannel> {
    if ancilla_dims.is_empty() {
        return Err(Error::InvalidArgument(
            "a random attack needs at least one ancilla factor".into(),
        ));
    }
    let de: usize = ancilla_dims.iter().product();
    let dims = protocol.dims();
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let round1 = haar_unitary(dims[0] * de, &mut rng);
    let round2 = haar_unitary(dims[1] * de, &mut rng);
    let digits = vec![0; ancilla_dims.len()];
    let ancilla = PureState::basis(ancilla_dims, &digits)?;
    let mut params = BTreeMap::new();
    params.insert("seed".into(), seed.to_string());
    params.insert(
        "ancilla".into(),
        ancilla_dims
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("x"),
    );
    AttackChannel::new(
        "random",
        params,
        ancilla_dims.to_vec(),
        ancilla.to_density(),
        Some(round1),
        Some(round2),
    )
}

/// A named attack family, as selected on the command line; [`AttackSpec::build`]
/// turns it into a concrete [`AttackChannel`] for a protocol.
#[derive(Clone, Debug, PartialEq)]
pub enum AttackSpec {
    Identity,
    InterceptResend { basis: BasisSpec, round: usize },
    Broadcast,
    DummySwap,
    MeasureSecond { basis: BasisSpec },
}

impl AttackSpec {
    /// Catalog names with one-line descriptions, for listings.
    pub fn catalog() -> Vec<(&'static str, &'static str)> {
        vec![
            ("identity", "clean channel, no eavesdropping"),
            (
                "intercept-resend",
                "measure the chosen round's factor in a chosen basis and resend \
                 (--basis-angle, --round)",
            ),
            (
                "broadcast",
                "reproduce the first-released reduction in an ancilla exactly \
                 (requires commuting reductions)",
            ),
            (
                "dummy-swap",
                "substitute a dummy signal and correct it after identifying the real one \
                 (requires pure signals with identical first reductions)",
            ),
            (
                "measure-second",
                "measure the second-released factor in a chosen basis and resend \
                 (--basis-angle)",
            ),
        ]
    }

    /// Parses command-line attack selection. `basis_angle` (radians)
    /// and `round` apply to the attacks that take them; supplying them
    /// elsewhere is an error, and omitting them picks the computational
    /// basis and round 1.
    pub fn from_cli(name: &str, basis_angle: Option<f64>, round: Option<usize>) -> Result<Self> {
        let basis = basis_angle.map(BasisSpec::new);
        let spec = match name {
            "identity" => AttackSpec::Identity,
            "intercept-resend" => AttackSpec::InterceptResend {
                basis: basis.unwrap_or_else(BasisSpec::z),
                round: round.unwrap_or(1),
            },
            "broadcast" => AttackSpec::Broadcast,
            "dummy-swap" => AttackSpec::DummySwap,
            "measure-second" => AttackSpec::MeasureSecond {
                basis: basis.unwrap_or_else(BasisSpec::z),
            },
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown attack `{}` (expected one of: {})",
                    other,
                    Self::catalog()
                        .iter()
                        .map(|(n, _)| *n)
                        .collect::<Vec<_>>()
                        .join(", ")
                )))
            }
        };
        let takes_basis = matches!(
            spec,
            AttackSpec::InterceptResend { .. } | AttackSpec::MeasureSecond { .. }
        );
        if basis_angle.is_some() && !takes_basis {
            return Err(Error::InvalidArgument(format!(
                "attack `{}` takes no --basis-angle",
                name
            )));
        }
        if round.is_some() && !matches!(spec, AttackSpec::InterceptResend { .. }) {
            return Err(Error::InvalidArgument(format!(
                "attack `{}` takes no --round",
                name
            )));
        }
        Ok(spec)
    }

    /// Builds the concrete channel for a protocol. Attacks whose
    /// preconditions the protocol does not meet return the underlying
    /// error ([`Error::PreconditionFailed`], [`Error::NonCommutingFamily`]).
    pub fn build(&self, protocol: &Protocol) -> Result<AttackChannel> {
        match self {
            AttackSpec::Identity => Ok(identity_attack()),
            AttackSpec::InterceptResend { basis, round } => intercept_resend(*basis, *round),
            AttackSpec::Broadcast => {
                let family: Vec<DensityMatrix> = protocol
                    .entries()
                    .iter()
                    .map(|e| e.prep.density().partial_trace(&[0]))
                    .collect::<Result<_>>()?;
                broadcast_attack(&family)
            }
            AttackSpec::DummySwap => dummy_swap_attack(protocol),
            AttackSpec::MeasureSecond { basis } => Ok(measure_second_attack(*basis)),
        }
    }
}

impl fmt::Display for AttackSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AttackSpec::Identity => f.write_str("identity"),
            AttackSpec::InterceptResend { .. } => f.write_str("intercept-resend"),
            AttackSpec::Broadcast => f.write_str("broadcast"),
            AttackSpec::DummySwap => f.write_str("dummy-swap"),
            AttackSpec::MeasureSecond { .. } => f.write_str("measure-second"),
        }
    }
}
