//! Clonability classification for orthogonal composite states released
//! one subsystem at a time.
//!
//! The question answered here: Alice encodes a label as one of several
//! *mutually orthogonal* states of a two-part system, and sends the parts
//! sequentially (the receiver holds part one before part two exists in
//! transit). Can an adversary sitting on the channel produce a perfect
//! copy without disturbing what the receiver gets?
//!
//! Orthogonality alone does not settle it. The adversary only ever holds
//! one subsystem at a time, so what matters is the family of *reduced*
//! states on each released part:
//!
//! * all first-part reductions pairwise orthogonal — measure the first
//!   part, learn the label, manufacture copies ([`Mechanism::MeasureFirst`]);
//! * all first-part reductions identical — substitute a self-made dummy
//!   for the first part, read the label from the second, then repair
//!   ([`Mechanism::DummySwap`]);
//! * all second-part reductions pairwise orthogonal — wait and measure
//!   the second part ([`Mechanism::MeasureSecond`]);
//! * otherwise the reduced families are non-orthogonal *and*
//!   non-identical on both parts, and cloning is impossible — though when
//!   the first-part reductions commute they can still be *broadcast*
//!   (a joint state whose two marginals both equal the reduction).
//!
//! [`classify_set`] decides which case holds and returns a machine-
//! checkable [`Witness`]. Subsystems are numbered from 1 in this module's
//! public types, matching the interchange format; the underlying
//! [`qlinalg`](crate::qlinalg) API uses 0-based factor indices.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qlinalg::{
    commutes_with_tol, is_identical_with_tol, is_orthogonal_with_tol, overlap,
    simultaneous_eigenbasis, tol, ComplexMatrix, DensityMatrix, PureState,
};

/// A labelled, ordered set of composite states with a release order.
#[derive(Clone, Debug)]
pub struct StateSet {
    dims: Vec<usize>,
    entries: Vec<(String, DensityMatrix)>,
    release_order: Vec<usize>,
}

impl StateSet {
    /// Builds a state set over factor dimensions `dims`.
    ///
    /// `release_order` lists 1-based subsystem numbers in the order they
    /// leave the sender (e.g. `[1, 2]` for "first factor first") and must
    /// be a permutation of `1..=dims.len()`. Labels must be nonempty and
    /// distinct; every state must live on exactly `dims`.
    pub fn new(
        dims: Vec<usize>,
        entries: Vec<(String, DensityMatrix)>,
        release_order: Vec<usize>,
    ) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidArgument("state set has no states".into()));
        }
        for (i, (label, state)) in entries.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::InvalidArgument(format!("state {} has empty label", i)));
            }
            if entries[..i].iter().any(|(other, _)| other == label) {
                return Err(Error::InvalidArgument(format!(
                    "duplicate label `{}`",
                    label
                )));
            }
            if state.dims() != dims.as_slice() {
                return Err(Error::DimensionMismatch(format!(
                    "state `{}` has factor dimensions {:?}, set declares {:?}",
                    label,
                    state.dims(),
                    dims
                )));
            }
        }
        let mut seen = release_order.clone();
        seen.sort_unstable();
        if seen != (1..=dims.len()).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument(format!(
                "release order {:?} is not a permutation of 1..={}",
                release_order,
                dims.len()
            )));
        }
        Ok(StateSet {
            dims,
            entries,
            release_order,
        })
    }

    /// Factor dimensions.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Labels in declaration order.
    pub fn labels(&self) -> Vec<&str> {
        self.entries.iter().map(|(l, _)| l.as_str()).collect()
    }

    /// The labelled states in declaration order.
    pub fn entries(&self) -> &[(String, DensityMatrix)] {
        &self.entries
    }

    /// The state for a label.
    pub fn get(&self, label: &str) -> Result<&DensityMatrix> {
        self.entries
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, s)| s)
            .ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    /// 1-based subsystem numbers in release order.
    pub fn release_order(&self) -> &[usize] {
        &self.release_order
    }

    /// The subsystem released first (1-based).
    pub fn first_released(&self) -> usize {
        self.release_order[0]
    }
}

/// Reduced states of every set member on one subsystem (1-based), in
/// declaration order.
pub fn reduced_family(set: &StateSet, subsystem: usize) -> Result<Vec<DensityMatrix>> {
    if subsystem == 0 || subsystem > set.dims().len() {
        return Err(Error::InvalidArgument(format!(
            "subsystem {} out of range 1..={}",
            subsystem,
            set.dims().len()
        )));
    }
    set.entries
        .iter()
        .map(|(_, state)| state.partial_trace(&[subsystem - 1]))
        .collect()
}

/// Top-level clonability verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Clonable,
    NotClonable,
}

/// How a clonable set can be cloned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Mechanism {
    /// Reductions on the first-released subsystem are pairwise orthogonal:
    /// measure it, learn the label.
    MeasureFirst,
    /// Reductions on the first-released subsystem are all identical:
    /// substitute a dummy, learn the label from the rest, repair.
    DummySwap,
    /// Reductions on the second-released subsystem are pairwise
    /// orthogonal: wait for it and measure.
    MeasureSecond,
}

/// Whether the first-released reductions can be broadcast.
///
/// Only the commuting case has a known construction; for non-commuting
/// families the question is open, so the honest answer is "unknown"
/// rather than "no".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Broadcastability {
    Broadcastable,
    Unknown,
}

/// One basis vector, split into real and imaginary parts for
/// serialisation (same convention as the state-set file format).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BasisVector {
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl BasisVector {
    fn from_column(col: &[Complex64]) -> Self {
        BasisVector {
            re: col.iter().map(|z| z.re).collect(),
            im: col.iter().map(|z| z.im).collect(),
        }
    }
}

/// Evidence backing a verdict: either a measurement basis on one
/// subsystem, or the pair of labels that defeats cloning.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Witness {
    /// For clonable sets: the subsystem (1-based) the adversary acts on,
    /// with an orthonormal basis that simultaneously diagonalises the
    /// relevant reduced family (for measurement mechanisms this basis
    /// distinguishes the labels; for the dummy swap it diagonalises the
    /// common reduction Eve must imitate).
    Basis {
        subsystem: usize,
        vectors: Vec<BasisVector>,
    },
    /// For unclonable sets: a pair whose reductions are non-orthogonal
    /// and non-identical on the first-released subsystem and
    /// non-orthogonal on the second.
    Pair { a: String, b: String },
    /// Every pair is clonable in isolation, but not all by one mechanism;
    /// whether such a set is clonable is an open question, so it is
    /// reported as not clonable. The labels name the first pair that
    /// breaks the leading mechanism.
    MixedMechanisms { a: String, b: String },
}

/// Verdict, mechanism, broadcastability, and witness for a state set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CloneVerdict {
    pub verdict: Verdict,
    /// Present exactly when `verdict` is [`Verdict::Clonable`].
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mechanism: Option<Mechanism>,
    /// Broadcastability of the first-released reduced family.
    pub broadcastable_first_subsystem: Broadcastability,
    pub witness: Witness,
}

impl CloneVerdict {
    /// True when the verdict is [`Verdict::Clonable`].
    pub fn is_clonable(&self) -> bool {
        self.verdict == Verdict::Clonable
    }
}

/// Pairwise predicate over a whole family.
fn all_pairs(
    family: &[DensityMatrix],
    mut pred: impl FnMut(&DensityMatrix, &DensityMatrix) -> Result<bool>,
) -> Result<bool> {
    for i in 0..family.len() {
        for j in (i + 1)..family.len() {
            if !pred(&family[i], &family[j])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn basis_witness(subsystem: usize, family: &[DensityMatrix]) -> Result<Witness> {
    let matrices: Vec<&ComplexMatrix> = family.iter().map(DensityMatrix::matrix).collect();
    let basis = simultaneous_eigenbasis(&matrices)?;
    let vectors = (0..basis.cols())
        .map(|k| BasisVector::from_column(&basis.col(k)))
        .collect();
    Ok(Witness::Basis { subsystem, vectors })
}

/// Pair-level mechanism under the same precedence as [`classify_set`];
/// `None` means the pair alone is unclonable.
fn pair_mechanism(
    first_a: &DensityMatrix,
    first_b: &DensityMatrix,
    second_a: &DensityMatrix,
    second_b: &DensityMatrix,
    tolerance: f64,
) -> Result<Option<Mechanism>> {
    if is_orthogonal_with_tol(first_a, first_b, tolerance)? {
        return Ok(Some(Mechanism::MeasureFirst));
    }
    if is_identical_with_tol(first_a, first_b, tolerance)? {
        return Ok(Some(Mechanism::DummySwap));
    }
    // Only reached when the first-subsystem test is inconclusive.
    if is_orthogonal_with_tol(second_a, second_b, tolerance)? {
        return Ok(Some(Mechanism::MeasureSecond));
    }
    Ok(None)
}

/// Classifies a state set, using the default classification tolerance.
pub fn classify_set(set: &StateSet) -> Result<CloneVerdict> {
    classify_set_with_tol(set, tol::CLASSIFY)
}

/// Classifies a state set with an explicit predicate tolerance.
///
/// Preconditions: exactly two factors (anything else is
/// [`Error::Unsupported`]) and pairwise orthogonal states (otherwise
/// [`Error::NotOrthogonalInput`] naming the offending pair).
pub fn classify_set_with_tol(set: &StateSet, tolerance: f64) -> Result<CloneVerdict> {
    if set.dims().len() != 2 {
        return Err(Error::Unsupported(format!(
            "classification is defined for two sequentially released subsystems, got {}",
            set.dims().len()
        )));
    }
    let entries = set.entries();
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            let ov = overlap(&entries[i].1, &entries[j].1)?;
            if ov.abs() > tolerance {
                return Err(Error::NotOrthogonalInput(format!(
                    "`{}` and `{}` have overlap {:.3e}",
                    entries[i].0, entries[j].0, ov
                )));
            }
        }
    }

    let first_sub = set.release_order()[0];
    let second_sub = set.release_order()[1];
    let first = reduced_family(set, first_sub)?;
    let second = reduced_family(set, second_sub)?;

    let broadcastable = if all_pairs(&first, |a, b| commutes_with_tol(a, b, tolerance))? {
        Broadcastability::Broadcastable
    } else {
        Broadcastability::Unknown
    };

    // A single mechanism must cover the whole set; precedence mirrors the
    // pair-level checks (first-subsystem tests before second).
    if all_pairs(&first, |a, b| is_orthogonal_with_tol(a, b, tolerance))? {
        return Ok(CloneVerdict {
            verdict: Verdict::Clonable,
            mechanism: Some(Mechanism::MeasureFirst),
            broadcastable_first_subsystem: broadcastable,
            witness: basis_witness(first_sub, &first)?,
        });
    }
    if all_pairs(&first, |a, b| is_identical_with_tol(a, b, tolerance))? {
        return Ok(CloneVerdict {
            verdict: Verdict::Clonable,
            mechanism: Some(Mechanism::DummySwap),
            broadcastable_first_subsystem: broadcastable,
            witness: basis_witness(first_sub, &first[..1])?,
        });
    }
    if all_pairs(&second, |a, b| is_orthogonal_with_tol(a, b, tolerance))? {
        return Ok(CloneVerdict {
            verdict: Verdict::Clonable,
            mechanism: Some(Mechanism::MeasureSecond),
            broadcastable_first_subsystem: broadcastable,
            witness: basis_witness(second_sub, &second)?,
        });
    }

    // Not clonable as a set. Prefer a pair that is unclonable outright;
    // fall back to the mixed-mechanisms diagnosis.
    let mut leading: Option<Mechanism> = None;
    let mut mixed_witness: Option<(String, String)> = None;
    for i in 0..entries.len() {
        for j in (i + 1)..entries.len() {
            let mech = pair_mechanism(&first[i], &first[j], &second[i], &second[j], tolerance)?;
            match mech {
                None => {
                    return Ok(CloneVerdict {
                        verdict: Verdict::NotClonable,
                        mechanism: None,
                        broadcastable_first_subsystem: broadcastable,
                        witness: Witness::Pair {
                            a: entries[i].0.clone(),
                            b: entries[j].0.clone(),
                        },
                    });
                }
                Some(m) => match leading {
                    None => leading = Some(m),
                    Some(lead) if m != lead && mixed_witness.is_none() => {
                        mixed_witness = Some((entries[i].0.clone(), entries[j].0.clone()));
                    }
                    _ => {}
                },
            }
        }
    }
    let (a, b) = mixed_witness.expect(
        "set-level mechanisms failed but every pair is clonable by one mechanism; \
         some pair must disagree with the leading mechanism",
    );
    Ok(CloneVerdict {
        verdict: Verdict::NotClonable,
        mechanism: None,
        broadcastable_first_subsystem: broadcastable,
        witness: Witness::MixedMechanisms { a, b },
    })
}

/// Classifies a single pair of composite states over the given factor
/// dimensions (released in natural order), labelling them `a` and `b`.
pub fn classify_pair(
    a: &DensityMatrix,
    b: &DensityMatrix,
    dims: &[usize],
) -> Result<CloneVerdict> {
    let rebuild = |state: &DensityMatrix, name: &str| -> Result<DensityMatrix> {
        if state.dims() == dims {
            Ok(state.clone())
        } else if state.total_dim() == dims.iter().product::<usize>() {
            DensityMatrix::new(dims.to_vec(), state.matrix().clone())
        } else {
            Err(Error::DimensionMismatch(format!(
                "state `{}` has dimension {}, factors {:?} require {}",
                name,
                state.total_dim(),
                dims,
                dims.iter().product::<usize>()
            )))
        }
    };
    let set = StateSet::new(
        dims.to_vec(),
        vec![
            ("a".to_string(), rebuild(a, "a")?),
            ("b".to_string(), rebuild(b, "b")?),
        ],
        (1..=dims.len()).collect(),
    )?;
    classify_set(&set)
}

/// For two orthogonal product pure states, returns the 1-based subsystem
/// whose factors are orthogonal — the subsystem a cloner could measure.
///
/// Errors: [`Error::NotProduct`] if either vector fails to factor across
/// the two subsystems, [`Error::NotOrthogonal`] if the states are not
/// orthogonal (no subsystem can witness it), [`Error::Unsupported`] for
/// anything but two factors.
pub fn product_orthogonality_locator(a: &PureState, b: &PureState) -> Result<usize> {
    if a.dims().len() != 2 || b.dims().len() != 2 {
        return Err(Error::Unsupported(
            "locator is defined for two-factor product states".into(),
        ));
    }
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch(format!(
            "states live on {:?} and {:?}",
            a.dims(),
            b.dims()
        )));
    }
    check_product(a, "first")?;
    check_product(b, "second")?;

    // For product states the reductions are the pure factors, so factor
    // orthogonality is exactly vanishing overlap of the reductions —
    // plain partial-trace arithmetic, no spectral code involved.
    let rho_a = a.to_density();
    let rho_b = b.to_density();
    for factor in 0..2 {
        let ra = rho_a.partial_trace(&[factor])?;
        let rb = rho_b.partial_trace(&[factor])?;
        if overlap(&ra, &rb)?.abs() <= tol::CLASSIFY {
            return Ok(factor + 1);
        }
    }
    let ov = a.inner(b)?;
    Err(Error::NotOrthogonal(format!(
        "no subsystem has orthogonal factors (composite overlap {:.3e})",
        ov.norm()
    )))
}

/// Verifies that a two-factor vector is a product, by reconstructing it
/// from its dominant row and column (a rank-one cross-ratio test that
/// avoids spectral noise near the tolerance boundary).
fn check_product(psi: &PureState, which: &str) -> Result<()> {
    let (d1, d2) = (psi.dims()[0], psi.dims()[1]);
    let amp = psi.amplitudes();
    let at = |i: usize, j: usize| amp[i * d2 + j];

    let (mut best_i, mut best_j) = (0usize, 0usize);
    let mut best = 0.0f64;
    for i in 0..d1 {
        for j in 0..d2 {
            let n = at(i, j).norm();
            if n > best {
                best = n;
                best_i = i;
                best_j = j;
            }
        }
    }
    // best ≥ 1/√(d1·d2) for any unit vector, so dividing by it is safe.
    let pivot = at(best_i, best_j);
    let mut worst = 0.0f64;
    for i in 0..d1 {
        for j in 0..d2 {
            let predicted = at(i, best_j) * at(best_i, j) / pivot;
            worst = worst.max((at(i, j) - predicted).norm());
        }
    }
    if worst > tol::CLASSIFY {
        return Err(Error::NotProduct(format!(
            "{} state deviates from a product by {:.3e}",
            which, worst
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    /// cos α |0,1⟩ + sin α |1,0⟩ and its orthogonal partner.
    fn entangled_pair(alpha: f64) -> (DensityMatrix, DensityMatrix) {
        let (ca, sa) = (alpha.cos(), alpha.sin());
        let psi0 = PureState::superposition(
            &[2, 2],
            &[(c(ca, 0.0), &[0, 1]), (c(sa, 0.0), &[1, 0])],
        )
        .unwrap();
        let psi1 = PureState::superposition(
            &[2, 2],
            &[(c(sa, 0.0), &[0, 1]), (c(-ca, 0.0), &[1, 0])],
        )
        .unwrap();
        (psi0.to_density(), psi1.to_density())
    }

    fn pair_set(alpha: f64) -> StateSet {
        let (r0, r1) = entangled_pair(alpha);
        StateSet::new(
            vec![2, 2],
            vec![("0".into(), r0), ("1".into(), r1)],
            vec![1, 2],
        )
        .unwrap()
    }

    #[test]
    fn orthogonal_reductions_clone_by_measurement() {
        let verdict = classify_set(&pair_set(0.0)).unwrap();
        assert_eq!(verdict.verdict, Verdict::Clonable);
        assert_eq!(verdict.mechanism, Some(Mechanism::MeasureFirst));
        assert_eq!(
            verdict.broadcastable_first_subsystem,
            Broadcastability::Broadcastable
        );
        match &verdict.witness {
            Witness::Basis { subsystem, vectors } => {
                assert_eq!(*subsystem, 1);
                assert_eq!(vectors.len(), 2);
            }
            other => panic!("expected basis witness, got {:?}", other),
        }
    }

    #[test]
    fn identical_reductions_clone_by_dummy_swap() {
        let verdict = classify_set(&pair_set(std::f64::consts::FRAC_PI_4)).unwrap();
        assert_eq!(verdict.verdict, Verdict::Clonable);
        assert_eq!(verdict.mechanism, Some(Mechanism::DummySwap));
    }

    #[test]
    fn intermediate_angle_is_not_clonable_but_broadcastable() {
        let verdict = classify_set(&pair_set(std::f64::consts::FRAC_PI_6)).unwrap();
        assert_eq!(verdict.verdict, Verdict::NotClonable);
        assert_eq!(verdict.mechanism, None);
        assert_eq!(
            verdict.broadcastable_first_subsystem,
            Broadcastability::Broadcastable
        );
        assert_eq!(
            verdict.witness,
            Witness::Pair {
                a: "0".into(),
                b: "1".into()
            }
        );
    }

    #[test]
    fn second_subsystem_mechanism_and_release_order() {
        // |0,0⟩ vs |0ˣ,1⟩: first reductions overlap, second are |0⟩ vs |1⟩.
        let h = 0.5f64.sqrt();
        let s0 = PureState::basis(&[2, 2], &[0, 0]).unwrap().to_density();
        let s1 = PureState::superposition(
            &[2, 2],
            &[(c(h, 0.0), &[0, 1]), (c(h, 0.0), &[1, 1])],
        )
        .unwrap()
        .to_density();
        let set = StateSet::new(
            vec![2, 2],
            vec![("0".into(), s0.clone()), ("1".into(), s1.clone())],
            vec![1, 2],
        )
        .unwrap();
        let verdict = classify_set(&set).unwrap();
        assert_eq!(verdict.mechanism, Some(Mechanism::MeasureSecond));
        match &verdict.witness {
            Witness::Basis { subsystem, .. } => assert_eq!(*subsystem, 2),
            other => panic!("expected basis witness, got {:?}", other),
        }
        // Releasing subsystem 2 first turns the same set into
        // measure-first: the classifier follows the release order.
        let reversed = StateSet::new(
            vec![2, 2],
            vec![("0".into(), s0), ("1".into(), s1)],
            vec![2, 1],
        )
        .unwrap();
        let verdict = classify_set(&reversed).unwrap();
        assert_eq!(verdict.mechanism, Some(Mechanism::MeasureFirst));
        match &verdict.witness {
            Witness::Basis { subsystem, .. } => assert_eq!(*subsystem, 2),
            other => panic!("expected basis witness, got {:?}", other),
        }
    }

    #[test]
    fn non_orthogonal_input_is_rejected_with_the_pair() {
        let (r0, _) = entangled_pair(0.3);
        let (r1, _) = entangled_pair(0.4);
        let set = StateSet::new(
            vec![2, 2],
            vec![("x".into(), r0), ("y".into(), r1)],
            vec![1, 2],
        )
        .unwrap();
        match classify_set(&set) {
            Err(Error::NotOrthogonalInput(msg)) => {
                assert!(msg.contains("`x`") && msg.contains("`y`"), "message: {msg}");
            }
            other => panic!("expected NotOrthogonalInput, got {:?}", other),
        }
    }

    #[test]
    fn mixed_mechanisms_reports_the_breaking_pair() {
        // |0,0⟩ / |1,0⟩ clone by measuring first; |0ˣ,1⟩ forces the
        // second-subsystem mechanism against both key states.
        let h = 0.5f64.sqrt();
        let phi0 = PureState::basis(&[2, 2], &[0, 0]).unwrap().to_density();
        let phi1 = PureState::basis(&[2, 2], &[1, 0]).unwrap().to_density();
        let phi2 = PureState::superposition(
            &[2, 2],
            &[(c(h, 0.0), &[0, 1]), (c(h, 0.0), &[1, 1])],
        )
        .unwrap()
        .to_density();
        let set = StateSet::new(
            vec![2, 2],
            vec![
                ("0".into(), phi0),
                ("1".into(), phi1),
                ("2".into(), phi2),
            ],
            vec![1, 2],
        )
        .unwrap();
        let verdict = classify_set(&set).unwrap();
        assert_eq!(verdict.verdict, Verdict::NotClonable);
        assert_eq!(
            verdict.witness,
            Witness::MixedMechanisms {
                a: "0".into(),
                b: "2".into()
            }
        );
        // |0⟩⟨0| and |0ˣ⟩⟨0ˣ| do not commute.
        assert_eq!(
            verdict.broadcastable_first_subsystem,
            Broadcastability::Unknown
        );
    }

    #[test]
    fn unsupported_factor_counts() {
        let s = PureState::basis(&[2, 2, 2], &[0, 0, 0]).unwrap().to_density();
        let set = StateSet::new(vec![2, 2, 2], vec![("0".into(), s)], vec![1, 2, 3]).unwrap();
        assert!(matches!(classify_set(&set), Err(Error::Unsupported(_))));
    }

    #[test]
    fn classify_pair_defaults() {
        let (r0, r1) = entangled_pair(std::f64::consts::FRAC_PI_6);
        let verdict = classify_pair(&r0, &r1, &[2, 2]).unwrap();
        assert_eq!(verdict.verdict, Verdict::NotClonable);
        assert_eq!(
            verdict.witness,
            Witness::Pair {
                a: "a".into(),
                b: "b".into()
            }
        );
    }

    #[test]
    fn verdicts_stable_under_tolerance_halving() {
        for alpha in [0.0, std::f64::consts::FRAC_PI_6, std::f64::consts::FRAC_PI_4] {
            let set = pair_set(alpha);
            let full = classify_set_with_tol(&set, tol::CLASSIFY).unwrap();
            let half = classify_set_with_tol(&set, tol::CLASSIFY / 2.0).unwrap();
            assert_eq!(full.verdict, half.verdict, "alpha = {alpha}");
            assert_eq!(full.mechanism, half.mechanism, "alpha = {alpha}");
        }
    }

    #[test]
    fn locator_finds_the_orthogonal_factor() {
        let zero_zero = PureState::basis(&[2, 2], &[0, 0]).unwrap();
        let one_chi = PureState::superposition(
            &[2, 2],
            &[(c(0.6, 0.0), &[1, 0]), (c(0.0, 0.8), &[1, 1])],
        )
        .unwrap();
        assert_eq!(product_orthogonality_locator(&zero_zero, &one_chi).unwrap(), 1);
        let zero_one = PureState::basis(&[2, 2], &[0, 1]).unwrap();
        assert_eq!(product_orthogonality_locator(&zero_zero, &zero_one).unwrap(), 2);
        // Orthogonal in both factors: the first subsystem is preferred.
        let one_one = PureState::basis(&[2, 2], &[1, 1]).unwrap();
        assert_eq!(product_orthogonality_locator(&zero_zero, &one_one).unwrap(), 1);
    }

    #[test]
    fn locator_rejects_entangled_and_non_orthogonal_input() {
        let h = 0.5f64.sqrt();
        let bell = PureState::superposition(
            &[2, 2],
            &[(c(h, 0.0), &[0, 0]), (c(h, 0.0), &[1, 1])],
        )
        .unwrap();
        let product = PureState::basis(&[2, 2], &[0, 0]).unwrap();
        assert!(matches!(
            product_orthogonality_locator(&bell, &product),
            Err(Error::NotProduct(_))
        ));
        let tilted = PureState::superposition(
            &[2, 2],
            &[(c(h, 0.0), &[0, 0]), (c(h, 0.0), &[1, 0])],
        )
        .unwrap();
        assert!(matches!(
            product_orthogonality_locator(&product, &tilted),
            Err(Error::NotOrthogonal(_))
        ));
    }

    #[test]
    fn state_set_validation() {
        let (r0, r1) = entangled_pair(0.5);
        assert!(StateSet::new(vec![2, 2], vec![], vec![1, 2]).is_err());
        assert!(StateSet::new(
            vec![2, 2],
            vec![("0".into(), r0.clone()), ("0".into(), r1.clone())],
            vec![1, 2]
        )
        .is_err());
        assert!(StateSet::new(
            vec![2, 2],
            vec![("0".into(), r0.clone())],
            vec![1, 1]
        )
        .is_err());
        assert!(StateSet::new(
            vec![2, 2],
            vec![("0".into(), r0)],
            vec![0, 1]
        )
        .is_err());
        assert!(StateSet::new(vec![2], vec![("0".into(), r1)], vec![1]).is_err());
    }
}
