//! The sequential-delivery run engine.
//!
//! A run wires three parties together: the sender encodes a label, the
//! eavesdropper's [`AttackChannel`] acts round by round, and the
//! receiver decodes. The global state lives on
//! `[first factor, second factor, ancilla…]` throughout; the release
//! schedule is enforced *structurally* — the round-1 unitary is embedded
//! on `(first factor, ancilla)` only and the round-2 unitary on
//! `(second factor, ancilla)` only, so an attack simply has no way to
//! express an operation on a factor it is not currently holding. An
//! attack whose round operator has the wrong dimension for that split is
//! rejected with [`Error::ScheduleViolation`] before anything runs.
//!
//! Every intermediate state is revalidated (Hermitian, unit trace,
//! positive semidefinite), so a run that completes certifies its own
//! numerical hygiene.
//!
//! [`report`] aggregates a run over all labels into a [`RunReport`]:
//! per-label receiver fidelity and decode statistics, the error rate
//! over key labels, the eavesdropper's optimal guess probability, and
//! the induced disturbance. [`sweep`] evaluates the two-state protocol
//! family over an angle grid (in parallel when beneficial), and
//! [`sample_run`] replaces the exact outcome statistics with seeded
//! Monte Carlo frequencies.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::adversary::{AttackChannel, AttackSpec};
use crate::cloneability::{classify_set, Verdict};
use crate::error::{Error, Result};
use crate::protocols::{make_koashi_imoto, DecodeOutcome, LabelRole, Protocol};
use crate::qlinalg::{
    embed_operator, fidelity, fidelity_pure, helstrom_guess, helstrom_projector, tol,
    ComplexMatrix, DensityMatrix,
};

/// Fraction of rounds spent on check labels in the sending
/// distribution, when the protocol has any (the paper's schemes leave
/// the proportion free).
pub const DEFAULT_CHECK_FRACTION: f64 = 0.25;

/// Slack accepted on computed probabilities before clamping into [0, 1].
const PROBABILITY_SLACK: f64 = 1e-12;
/// Slack accepted on fidelities, whose eigensolver round trip is noisier
/// than a single projector expectation.
const FIDELITY_SLACK: f64 = 1e-9;

fn clamp_unit(value: f64, slack: f64, what: &str) -> Result<f64> {
    if !(value >= -slack && value <= 1.0 + slack) {
        return Err(Error::InvalidState(format!(
            "{} = {} lies outside [0, 1] beyond tolerance",
            what, value
        )));
    }
    Ok(value.clamp(0.0, 1.0))
}

/// The labelled stages of one run's global state.
#[derive(Clone, Debug)]
pub struct RunTrace {
    /// `encode(label) ⊗ ancilla_init`, before any interaction.
    pub prepared: DensityMatrix,
    /// After the round-1 unitary (equal to `prepared` when the round
    /// passes).
    pub after_round1: DensityMatrix,
    /// After the round-2 unitary; the final global state.
    pub after_round2: DensityMatrix,
}

impl RunTrace {
    /// The stages in order, with names, for inspection and hygiene
    /// checks.
    pub fn stages(&self) -> [(&'static str, &DensityMatrix); 3] {
        [
            ("prepared", &self.prepared),
            ("after-round-1", &self.after_round1),
            ("after-round-2", &self.after_round2),
        ]
    }
}

fn apply_round(
    global: &DensityMatrix,
    round: Option<&ComplexMatrix>,
    flying_factor: usize,
    flying_dim: usize,
    ancilla_count: usize,
    ancilla_total: usize,
) -> Result<DensityMatrix> {
    let u = match round {
        None => return Ok(global.clone()),
        Some(u) => u,
    };
    let expected = flying_dim * ancilla_total;
    if u.rows() != expected {
        return Err(Error::ScheduleViolation(format!(
            "round {} operator has dimension {}, but may act only on the factor in transit \
             (dimension {}) and the ancilla (dimension {}), i.e. on dimension {}",
            flying_factor + 1,
            u.rows(),
            flying_dim,
            ancilla_total,
            expected
        )));
    }
    let mut factors = vec![flying_factor];
    factors.extend(2..2 + ancilla_count);
    let embedded = embed_operator(u, global.dims(), &factors)?;
    global.evolve(&embedded)
}

/// Runs one label through the channel and returns the global state at
/// every stage. Every stage is a validated [`DensityMatrix`].
pub fn run_trace(
    protocol: &Protocol,
    attack: &AttackChannel,
    label: &str,
) -> Result<RunTrace> {
    let dims = protocol.dims();
    if dims.len() != 2 {
        return Err(Error::Unsupported(format!(
            "the run engine drives two-factor protocols, got {} factors",
            dims.len()
        )));
    }
    let ancilla_count = attack.ancilla_dims().len();
    let ancilla_total = attack.ancilla_total_dim();
    let prepared = protocol.encode(label)?.tensor(attack.ancilla_init());
    let after_round1 = apply_round(
        &prepared,
        attack.round1(),
        0,
        dims[0],
        ancilla_count,
        ancilla_total,
    )?;
    let after_round2 = apply_round(
        &after_round1,
        attack.round2(),
        1,
        dims[1],
        ancilla_count,
        ancilla_total,
    )?;
    Ok(RunTrace {
        prepared,
        after_round1,
        after_round2,
    })
}

/// Runs one label through the channel: exact evolution of
/// `encode(label) ⊗ ancilla_init` under the two rounds. Returns the
/// receiver's marginal on the signal factors and the eavesdropper's
/// marginal on the ancilla (a scalar state when there is none).
pub fn run(
    protocol: &Protocol,
    attack: &AttackChannel,
    label: &str,
) -> Result<(DensityMatrix, DensityMatrix)> {
    let trace = run_trace(protocol, attack, label)?;
    let global = trace.after_round2;
    let signal_factors = protocol.dims().len();
    if attack.ancilla_dims().is_empty() {
        return Ok((global, DensityMatrix::scalar()));
    }
    let bob = global.partial_trace(&(0..signal_factors).collect::<Vec<_>>())?;
    let eve = global.partial_trace(
        &(signal_factors..signal_factors + attack.ancilla_dims().len()).collect::<Vec<_>>(),
    )?;
    Ok((bob, eve))
}

/// Receiver-side metrics for one label.
#[derive(Clone, Debug, Serialize)]
pub struct LabelMetrics {
    pub label: String,
    pub role: LabelRole,
    /// Fidelity of the received state with the clean encoding.
    pub fidelity: f64,
    /// Probability the decode measurement returns the sent label.
    pub p_correct: f64,
    /// Probability it returns a different label.
    pub p_wrong: f64,
    /// Probability it rejects the round.
    pub p_reject: f64,
}

/// Whether the report's statistics are exact or sampled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RunMode {
    Exact,
    Sampled { shots: u64, seed: u64 },
}

/// The aggregate outcome of driving one protocol through one attack.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub protocol: String,
    pub protocol_params: BTreeMap<String, String>,
    pub attack: String,
    pub attack_params: BTreeMap<String, String>,
    pub labels: Vec<LabelMetrics>,
    /// Probability the decoded label is wrong, conditioned on a
    /// conclusive decode, with key labels sent uniformly.
    pub qber: f64,
    /// Probability of an inconclusive decode under the sending
    /// distribution (key labels uniform, check labels sharing
    /// [`DEFAULT_CHECK_FRACTION`]).
    pub reject_rate: f64,
    /// The eavesdropper's optimal probability of guessing the key label
    /// from her ancilla (Helstrom bound on her per-label marginals).
    pub eve_guess: f64,
    /// `1 − min` over labels of the receiver fidelity.
    pub disturbance: f64,
    /// Consistency between this run and the clonability taxonomy: a
    /// perfect clone (guess ≈ 1, disturbance ≈ 0) observed against a
    /// set classified *not clonable* would make this false.
    pub verdict_crosscheck: bool,
    pub mode: RunMode,
}

/// The distribution over labels the sender draws from: key labels
/// uniform on the non-check share, check labels splitting
/// `check_fraction` equally (ignored when the protocol has no check
/// labels).
pub fn sending_distribution(
    protocol: &Protocol,
    check_fraction: f64,
) -> Result<Vec<(String, f64)>> {
    if !(0.0..1.0).contains(&check_fraction) {
        return Err(Error::InvalidArgument(format!(
            "check fraction {} outside [0, 1)",
            check_fraction
        )));
    }
    let keys = protocol.key_labels();
    let checks = protocol.check_labels();
    if keys.is_empty() {
        return Err(Error::InvalidArgument(
            "protocol has no key labels to send".into(),
        ));
    }
    let check_share = if checks.is_empty() { 0.0 } else { check_fraction };
    let mut dist = Vec::new();
    for label in &keys {
        dist.push((label.to_string(), (1.0 - check_share) / keys.len() as f64));
    }
    for label in &checks {
        dist.push((label.to_string(), check_share / checks.len() as f64));
    }
    Ok(dist)
}

struct LabelOutcome {
    metrics: LabelMetrics,
    eve_state: DensityMatrix,
    decode_probs: Vec<f64>,
}

fn evaluate_label(
    protocol: &Protocol,
    attack: &AttackChannel,
    label_index: usize,
) -> Result<LabelOutcome> {
    let entry = &protocol.entries()[label_index];
    let (bob, eve) = run(protocol, attack, &entry.label)?;
    let fid = match entry.prep.as_pure() {
        Some(psi) => fidelity_pure(&bob, psi)?,
        None => fidelity(&entry.prep.density(), &bob)?,
    };
    let fid = clamp_unit(fid, FIDELITY_SLACK, "fidelity")?;
    let mut decode_probs = Vec::with_capacity(protocol.decode().len());
    let (mut p_correct, mut p_wrong, mut p_reject) = (0.0, 0.0, 0.0);
    for dp in protocol.decode() {
        let p = (&dp.projector * bob.matrix()).trace().re;
        let p = clamp_unit(p, PROBABILITY_SLACK, "decode probability")?;
        decode_probs.push(p);
        match &dp.outcome {
            DecodeOutcome::Label(l) if *l == entry.label => p_correct += p,
            DecodeOutcome::Label(_) => p_wrong += p,
            DecodeOutcome::Reject => p_reject += p,
        }
    }
    Ok(LabelOutcome {
        metrics: LabelMetrics {
            label: entry.label.clone(),
            role: entry.role,
            fidelity: fid,
            p_correct,
            p_wrong,
            p_reject,
        },
        eve_state: eve,
        decode_probs,
    })
}

fn eve_guess_over_keys(
    protocol: &Protocol,
    outcomes: &[LabelOutcome],
) -> Result<f64> {
    let key_states: Vec<&DensityMatrix> = protocol
        .entries()
        .iter()
        .zip(outcomes)
        .filter(|(e, _)| e.role == LabelRole::Key)
        .map(|(_, o)| &o.eve_state)
        .collect();
    match key_states.len() {
        0 | 1 => Ok(1.0), // a known key needs no measurement
        2 => helstrom_guess(key_states[0], key_states[1], 0.5),
        _ => {
            // Catalog protocols carry two key labels; for larger sets
            // report the best pairwise discrimination.
            let mut best = 0.5f64;
            for i in 0..key_states.len() {
                for j in (i + 1)..key_states.len() {
                    best = best.max(helstrom_guess(key_states[i], key_states[j], 0.5)?);
                }
            }
            Ok(best)
        }
    }
}

fn aggregate(
    protocol: &Protocol,
    attack: &AttackChannel,
    outcomes: Vec<LabelOutcome>,
    mode: RunMode,
    sampled: Option<&SampledStatistics>,
) -> Result<RunReport> {
    let labels: Vec<LabelMetrics> = outcomes.iter().map(|o| o.metrics.clone()).collect();

    let (qber, reject_rate, eve_guess) = match sampled {
        None => {
            let mut wrong = 0.0;
            let mut conclusive = 0.0;
            for m in labels.iter().filter(|m| m.role == LabelRole::Key) {
                wrong += m.p_wrong;
                conclusive += m.p_correct + m.p_wrong;
            }
            let qber = if conclusive > 0.0 { wrong / conclusive } else { 0.0 };
            let dist = sending_distribution(protocol, DEFAULT_CHECK_FRACTION)?;
            let reject_rate = dist
                .iter()
                .map(|(label, w)| {
                    let m = labels.iter().find(|m| &m.label == label).expect("label");
                    w * m.p_reject
                })
                .sum();
            (qber, reject_rate, eve_guess_over_keys(protocol, &outcomes)?)
        }
        Some(stats) => (stats.qber, stats.reject_rate, stats.eve_guess),
    };

    let min_fidelity = labels
        .iter()
        .map(|m| m.fidelity)
        .fold(f64::INFINITY, f64::min);
    let disturbance = clamp_unit(1.0 - min_fidelity, FIDELITY_SLACK, "disturbance")?;

    // Exact guess/disturbance always back the crosscheck, even in
    // sampled mode, so it never flickers with shot noise.
    let exact_guess = eve_guess_over_keys(protocol, &outcomes)?;
    let verdict = classify_set(&protocol.state_set())?;
    let perfect_clone = exact_guess >= 1.0 - tol::CLASSIFY && disturbance <= tol::CLASSIFY;
    let verdict_crosscheck = !(verdict.verdict == Verdict::NotClonable && perfect_clone);

    Ok(RunReport {
        protocol: protocol.name().to_string(),
        protocol_params: protocol.params(),
        attack: attack.name().to_string(),
        attack_params: attack.params().clone(),
        labels,
        qber,
        reject_rate,
        eve_guess,
        disturbance,
        verdict_crosscheck,
        mode,
    })
}

/// Drives every label through the channel and aggregates the exact
/// metrics into a [`RunReport`].
pub fn report(protocol: &Protocol, attack: &AttackChannel) -> Result<RunReport> {
    let outcomes: Vec<LabelOutcome> = (0..protocol.entries().len())
        .map(|i| evaluate_label(protocol, attack, i))
        .collect::<Result<_>>()?;
    aggregate(protocol, attack, outcomes, RunMode::Exact, None)
}

/// An inclusive evenly spaced angle grid for the two-state protocol
/// family. `steps ≥ 2`, `0 ≤ min < max ≤ π/2`.
pub fn ki_alpha_grid(min: f64, max: f64, steps: usize) -> Result<Vec<f64>> {
    if steps < 2 {
        return Err(Error::InvalidArgument(format!(
            "a sweep needs at least 2 steps, got {}",
            steps
        )));
    }
    if !(min.is_finite() && max.is_finite())
        || !(0.0..=std::f64::consts::FRAC_PI_2).contains(&min)
        || !(0.0..=std::f64::consts::FRAC_PI_2).contains(&max)
        || min >= max
    {
        return Err(Error::InvalidArgument(format!(
            "bad sweep range [{}, {}]: need 0 ≤ min < max ≤ π/2",
            min, max
        )));
    }
    Ok((0..steps)
        .map(|i| min + (max - min) * i as f64 / (steps - 1) as f64)
        .collect())
}

fn sweep_thread_cap() -> Result<Option<usize>> {
    match std::env::var("ORTHOCLONE_THREADS") {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(Error::InvalidArgument(format!(
            "ORTHOCLONE_THREADS is not valid UTF-8: {}",
            e
        ))),
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Some(n)),
            _ => Err(Error::InvalidArgument(format!(
                "ORTHOCLONE_THREADS must be a positive integer, got `{}`",
                raw
            ))),
        },
    }
}

/// Evaluates the two-state protocol family over an angle grid against
/// one attack family, rebuilding the attack for each angle (its
/// construction may depend on the reduced states). Runs in parallel
/// across angles — capped by the `ORTHOCLONE_THREADS` environment
/// variable — and returns reports in grid order regardless of
/// scheduling.
pub fn sweep(alphas: &[f64], spec: &AttackSpec) -> Result<Vec<RunReport>> {
    let evaluate = |alpha: &f64| -> Result<RunReport> {
        let protocol = make_koashi_imoto(*alpha)?;
        let attack = spec.build(&protocol)?;
        report(&protocol, &attack)
    };
    match sweep_thread_cap()? {
        None => alphas.par_iter().map(evaluate).collect(),
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {}", e)))?
            .install(|| alphas.par_iter().map(evaluate).collect()),
    }
}

struct SampledStatistics {
    qber: f64,
    reject_rate: f64,
    eve_guess: f64,
}

fn sample_discrete(rng: &mut ChaCha20Rng, probs: &[f64]) -> usize {
    let draw: f64 = rng.gen();
    let mut cumulative = 0.0;
    for (i, p) in probs.iter().enumerate() {
        cumulative += p;
        if draw < cumulative {
            return i;
        }
    }
    probs.len() - 1
}

/// Monte Carlo variant of [`report`]: decode outcomes and the
/// eavesdropper's measurement results are *sampled* from their exact
/// distributions instead of reported as probabilities.
///
/// `label` fixes the sent label for every shot; `None` draws labels
/// from the sending distribution. The generator is seeded and
/// stream-split — stream 0 draws labels, stream 1 the receiver's
/// outcomes, stream 2 the eavesdropper's — so a fixed seed reproduces
/// output bit for bit regardless of protocol size. Per-label decode
/// frequencies, the error and reject rates, and the eavesdropper's
/// guess rate become empirical; fidelities (and the disturbance and
/// crosscheck derived from them) are not measurement statistics and
/// stay exact.
pub fn sample_run(
    protocol: &Protocol,
    attack: &AttackChannel,
    label: Option<&str>,
    shots: u64,
    seed: u64,
) -> Result<RunReport> {
    if shots == 0 {
        return Err(Error::InvalidArgument("shots must be ≥ 1".into()));
    }
    let outcomes: Vec<LabelOutcome> = (0..protocol.entries().len())
        .map(|i| evaluate_label(protocol, attack, i))
        .collect::<Result<_>>()?;

    // The sending distribution, as index-aligned weights.
    let weights: Vec<f64> = match label {
        Some(l) => {
            protocol.entry(l)?; // validate
            protocol
                .entries()
                .iter()
                .map(|e| if e.label == l { 1.0 } else { 0.0 })
                .collect()
        }
        None => {
            let dist = sending_distribution(protocol, DEFAULT_CHECK_FRACTION)?;
            protocol
                .entries()
                .iter()
                .map(|e| {
                    dist.iter()
                        .find(|(l, _)| *l == e.label)
                        .map(|(_, w)| *w)
                        .unwrap_or(0.0)
                })
                .collect()
        }
    };

    // The eavesdropper measures the optimal two-outcome discriminator
    // for the two key labels; outcome probabilities per sent label are
    // exact expectations of that projector.
    let key_indices: Vec<usize> = protocol
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.role == LabelRole::Key)
        .map(|(i, _)| i)
        .collect();
    let eve_projector = if key_indices.len() == 2 {
        Some(helstrom_projector(
            &outcomes[key_indices[0]].eve_state,
            &outcomes[key_indices[1]].eve_state,
            0.5,
        )?)
    } else {
        None
    };
    let eve_hit_probs: Vec<f64> = outcomes
        .iter()
        .map(|o| match &eve_projector {
            Some(p) => {
                let prob = (p * o.eve_state.matrix()).trace().re;
                clamp_unit(prob, PROBABILITY_SLACK, "discrimination probability")
            }
            None => Ok(1.0),
        })
        .collect::<Result<_>>()?;

    let mut label_rng = ChaCha20Rng::seed_from_u64(seed);
    label_rng.set_stream(0);
    let mut bob_rng = ChaCha20Rng::seed_from_u64(seed);
    bob_rng.set_stream(1);
    let mut eve_rng = ChaCha20Rng::seed_from_u64(seed);
    eve_rng.set_stream(2);

    let n_labels = protocol.entries().len();
    let mut sent = vec![0u64; n_labels];
    let mut correct = vec![0u64; n_labels];
    let mut wrong = vec![0u64; n_labels];
    let mut rejected = vec![0u64; n_labels];
    let mut eve_correct = 0u64;
    let mut eve_relevant = 0u64;
    for _ in 0..shots {
        let which = sample_discrete(&mut label_rng, &weights);
        sent[which] += 1;
        let outcome = sample_discrete(&mut bob_rng, &outcomes[which].decode_probs);
        match &protocol.decode()[outcome].outcome {
            DecodeOutcome::Label(l) if *l == protocol.entries()[which].label => {
                correct[which] += 1
            }
            DecodeOutcome::Label(_) => wrong[which] += 1,
            DecodeOutcome::Reject => rejected[which] += 1,
        }
        if eve_projector.is_some() && key_indices.contains(&which) {
            eve_relevant += 1;
            let fires: bool = eve_rng.gen::<f64>() < eve_hit_probs[which];
            let guessed = if fires { key_indices[0] } else { key_indices[1] };
            if guessed == which {
                eve_correct += 1;
            }
        }
    }

    let frequency = |count: u64, total: u64| {
        if total == 0 {
            0.0
        } else {
            count as f64 / total as f64
        }
    };
    let empirical: Vec<LabelOutcome> = outcomes
        .into_iter()
        .enumerate()
        .map(|(i, o)| LabelOutcome {
            metrics: LabelMetrics {
                p_correct: frequency(correct[i], sent[i]),
                p_wrong: frequency(wrong[i], sent[i]),
                p_reject: frequency(rejected[i], sent[i]),
                ..o.metrics
            },
            ..o
        })
        .collect();

    let key_conclusive: u64 = key_indices.iter().map(|&i| correct[i] + wrong[i]).sum();
    let key_wrong: u64 = key_indices.iter().map(|&i| wrong[i]).sum();
    let stats = SampledStatistics {
        qber: frequency(key_wrong, key_conclusive),
        reject_rate: frequency(rejected.iter().sum(), shots),
        eve_guess: if eve_projector.is_some() {
            frequency(eve_correct, eve_relevant)
        } else {
            1.0
        },
    };
    aggregate(
        protocol,
        attack,
        empirical,
        RunMode::Sampled { shots, seed },
        Some(&stats),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversary::{
        broadcast_attack, dummy_swap_attack, identity_attack, intercept_resend, random_attack,
    };
    use crate::protocols::{make_bb84_composite, make_goldenberg_vaidman, BasisSpec};

    fn ki(alpha: f64) -> Protocol {
        make_koashi_imoto(alpha).unwrap()
    }

    #[test]
    fn identity_attack_is_invisible() {
        for protocol in [
            ki(std::f64::consts::FRAC_PI_6),
            make_goldenberg_vaidman(),
            make_bb84_composite(),
        ] {
            let rep = report(&protocol, &identity_attack()).unwrap();
            assert!(rep.qber.abs() < 1e-9);
            assert!((rep.eve_guess - 0.5).abs() < 1e-9);
            assert!(rep.disturbance.abs() < 1e-9);
            assert!(rep.reject_rate.abs() < 1e-9);
            assert!(rep.verdict_crosscheck);
            for m in &rep.labels {
                assert!((m.p_correct - 1.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn identity_run_returns_clean_marginals() {
        let protocol = ki(std::f64::consts::FRAC_PI_6);
        let (bob, eve) = run(&protocol, &identity_attack(), "0").unwrap();
        let clean = protocol.encode("0").unwrap();
        assert!(bob.matrix().max_abs_diff(clean.matrix()) < 1e-12);
        assert_eq!(eve.dims(), &[] as &[usize]);
    }

    #[test]
    fn dummy_swap_clones_perfectly_at_pi_4() {
        let protocol = ki(std::f64::consts::FRAC_PI_4);
        let attack = dummy_swap_attack(&protocol).unwrap();
        let rep = report(&protocol, &attack).unwrap();
        assert!((rep.eve_guess - 1.0).abs() < 1e-9);
        assert!(rep.disturbance < 1e-9);
        assert!(rep.qber < 1e-9);
        assert!(rep.verdict_crosscheck, "perfect clone of a clonable set");
        // Eve's pair is an exact copy of the signal.
        let (_, eve) = run(&protocol, &attack, "0").unwrap();
        let psi0 = protocol.entries()[0].prep.as_pure().unwrap();
        assert!((fidelity_pure(&eve, psi0).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn intercept_z_guess_matches_the_analytic_curve() {
        for alpha in [0.0, 0.3, std::f64::consts::FRAC_PI_4, 1.2] {
            let protocol = ki(alpha);
            let attack = intercept_resend(BasisSpec::z(), 1).unwrap();
            let rep = report(&protocol, &attack).unwrap();
            let expected = 0.5 + 0.5 * (2.0 * alpha).cos().abs();
            assert!(
                (rep.eve_guess - expected).abs() < 1e-9,
                "α = {}: guess {} vs {}",
                alpha,
                rep.eve_guess,
                expected
            );
        }
    }

    #[test]
    fn broadcast_at_pi_4_is_silent_and_uninformative() {
        let protocol = ki(std::f64::consts::FRAC_PI_4);
        let family: Vec<DensityMatrix> = protocol
            .entries()
            .iter()
            .map(|e| e.prep.density().partial_trace(&[0]).unwrap())
            .collect();
        let attack = broadcast_attack(&family).unwrap();
        let rep = report(&protocol, &attack).unwrap();
        assert_eq!(rep.disturbance, 0.0, "local preparation leaves the signal alone");
        assert!((rep.eve_guess - 0.5).abs() < 1e-12);
    }

    #[test]
    fn broadcast_at_pi_6_induces_noise_but_keeps_marginals() {
        let protocol = ki(std::f64::consts::FRAC_PI_6);
        let family: Vec<DensityMatrix> = protocol
            .entries()
            .iter()
            .map(|e| e.prep.density().partial_trace(&[0]).unwrap())
            .collect();
        let attack = broadcast_attack(&family).unwrap();
        let rep = report(&protocol, &attack).unwrap();
        // Disturbance 1 − (cos⁴ + sin⁴) = sin²(2α)/2 = 3/8.
        assert!((rep.disturbance - 0.375).abs() < 1e-9);
        // Eve's marginal is the exact reduction, so her guess is the
        // reductions' Helstrom value ¾.
        assert!((rep.eve_guess - 0.75).abs() < 1e-9);
        // Bob's first-factor marginal is still the exact reduction.
        let (bob, _) = run(&protocol, &attack, "0").unwrap();
        let first = bob.partial_trace(&[0]).unwrap();
        assert!(first.matrix().max_abs_diff(family[0].matrix()) < 1e-10);
    }

    #[test]
    fn gv_check_state_exposes_intercept() {
        let protocol = make_goldenberg_vaidman();
        // A computational-basis intercept leaves the check state |0,0⟩
        // invariant — it is caught by the entangled key pair instead.
        let rep_z = report(
            &protocol,
            &intercept_resend(BasisSpec::z(), 1).unwrap(),
        )
        .unwrap();
        let check_z = rep_z.labels.iter().find(|m| m.label == "2").unwrap();
        assert!((check_z.fidelity - 1.0).abs() < 1e-9);
        assert!(rep_z.qber > 1e-3);
        // A conjugate-basis intercept is what the check state is for:
        // measuring |0⟩ in the diagonal basis scrambles it to I/2.
        let rep_x = report(
            &protocol,
            &intercept_resend(BasisSpec::x(), 1).unwrap(),
        )
        .unwrap();
        let check_x = rep_x.labels.iter().find(|m| m.label == "2").unwrap();
        assert!((check_x.fidelity - 0.5).abs() < 1e-9);
        assert!(check_x.p_correct < 1.0 - 1e-3);
    }

    #[test]
    fn schedule_violation_is_structural() {
        // A 16-dimensional round-1 operator would have to touch more
        // than (first factor ⊗ ancilla): rejected before running.
        let protocol = ki(0.3);
        let attack = random_attack(&protocol, &[2, 2], 7).unwrap();
        // Rounds are 8-dimensional (2·4): compatible.
        assert!(report(&protocol, &attack).is_ok());
        let bad = random_attack(&protocol, &[2, 2, 2], 7).unwrap();
        // 16-dimensional rounds cannot be embedded on (2 ⊗ 4): the
        // declared ancilla is [2,2,2] here, so instead make the protocol
        // mismatch by reusing the 16-dim attack's rounds with a smaller
        // declared ancilla.
        let mismatched = AttackChannel::new(
            "mismatched",
            Default::default(),
            vec![2],
            crate::qlinalg::DensityMatrix::maximally_mixed(&[2]),
            bad.round1().cloned(),
            None,
        )
        .unwrap();
        match report(&protocol, &mismatched) {
            Err(Error::ScheduleViolation(msg)) => {
                assert!(msg.contains("round 1"), "message: {}", msg)
            }
            other => panic!("expected ScheduleViolation, got {:?}", other),
        }
    }

    #[test]
    fn sweep_is_deterministic_and_ordered() {
        let grid = ki_alpha_grid(0.0, std::f64::consts::FRAC_PI_2, 5).unwrap();
        assert_eq!(grid.len(), 5);
        assert!((grid[2] - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
        let spec = AttackSpec::InterceptResend {
            basis: BasisSpec::z(),
            round: 1,
        };
        let a = sweep(&grid, &spec).unwrap();
        let b = sweep(&grid, &spec).unwrap();
        assert_eq!(a.len(), 5);
        for (ra, rb) in a.iter().zip(&b) {
            assert_eq!(ra.protocol_params, rb.protocol_params);
            assert!((ra.eve_guess - rb.eve_guess).abs() < 1e-15);
        }
        assert!(ki_alpha_grid(0.0, 1.0, 1).is_err());
        assert!(ki_alpha_grid(1.0, 0.5, 3).is_err());
    }

    #[test]
    fn sampled_mode_converges_and_reproduces() {
        let protocol = ki(std::f64::consts::FRAC_PI_6);
        let attack = intercept_resend(BasisSpec::z(), 1).unwrap();
        let exact = report(&protocol, &attack).unwrap();
        let sampled = sample_run(&protocol, &attack, None, 100_000, 11).unwrap();
        // 5σ binomial bounds at 10⁵ shots.
        let sigma = |p: f64| (p * (1.0 - p) / 100_000.0).sqrt();
        assert!((sampled.qber - exact.qber).abs() <= 5.0 * sigma(exact.qber) + 1e-9);
        assert!(
            (sampled.eve_guess - exact.eve_guess).abs()
                <= 5.0 * sigma(exact.eve_guess) + 1e-9
        );
        let again = sample_run(&protocol, &attack, None, 100_000, 11).unwrap();
        assert_eq!(
            serde_json::to_string(&sampled).unwrap(),
            serde_json::to_string(&again).unwrap()
        );
        let fixed = sample_run(&protocol, &attack, Some("1"), 1000, 3).unwrap();
        let m0 = fixed.labels.iter().find(|m| m.label == "0").unwrap();
        assert_eq!(m0.p_correct + m0.p_wrong + m0.p_reject, 0.0);
        assert!(sample_run(&protocol, &attack, None, 0, 1).is_err());
        assert!(sample_run(&protocol, &attack, Some("zz"), 10, 1).is_err());
    }

    #[test]
    fn run_trace_stages_are_validated_states() {
        let protocol = ki(0.9);
        let attack = random_attack(&protocol, &[2], 19).unwrap();
        let trace = run_trace(&protocol, &attack, "1").unwrap();
        for (name, state) in trace.stages() {
            // Reconstructing through the validating constructor proves
            // each stage is Hermitian, unit-trace, and PSD.
            let rebuilt = DensityMatrix::new(state.dims().to_vec(), state.matrix().clone());
            assert!(rebuilt.is_ok(), "stage {} failed validation", name);
        }
    }
}
