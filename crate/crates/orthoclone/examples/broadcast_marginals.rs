//! Broadcast the first-released particle of an unclonable signal set:
//! both output marginals match the input exactly, yet the composite
//! correlations — and the secret they carry — survive.
//!
//! A family of commuting density matrices {ρ̄_k} can always be
//! *broadcast*: there is a channel producing a two-party state whose
//! both reductions equal ρ̄_k. For a non-degenerate commuting family the
//! recipe is simply "measure in the common eigenbasis and copy the
//! outcome"; when every label shares one reduction ρ̄ the adversary does
//! not even need to touch the signal — she prepares ρ̄ locally.
//!
//! But broadcasting is weaker than cloning. This example drives the
//! `ki(π/6)` protocol — classified *not clonable* — through the
//! broadcast attack and shows:
//!
//! - the receiver's first-particle marginal is untouched (distance 0),
//! - the adversary's copy of that marginal is exact too,
//! - yet the *joint* signal state is damaged: fidelity drops and the
//!   receiver's error rate rises, because copying the eigenbasis outcome
//!   decoheres the entanglement between the two signal particles,
//! - while at π/4, where the reductions coincide, local preparation
//!   broadcasts with literally zero disturbance (and zero information).
//!
//! Run with:
//!
//! ```bash
//! cargo run -p orthoclone --example broadcast_marginals
//! ```

use orthoclone::adversary::broadcast_attack;
use orthoclone::cloneability::{classify_set, reduced_family, Verdict};
use orthoclone::protocols::make_koashi_imoto;
use orthoclone::qlinalg::trace_distance;
use orthoclone::simulator::{report, run};
use orthoclone::Result;
use std::f64::consts::{FRAC_PI_4, FRAC_PI_6};

fn main() -> Result<()> {
    // --- π/6: commuting, non-identical reductions --------------------
    let protocol = make_koashi_imoto(FRAC_PI_6)?;
    let set = protocol.state_set();
    let verdict = classify_set(&set)?;
    println!(
        "ki(π/6) verdict: {:?} — yet its first family commutes, so it can be broadcast",
        verdict.verdict
    );
    assert_eq!(verdict.verdict, Verdict::NotClonable);

    let family = reduced_family(&set, 1)?;
    let attack = broadcast_attack(&family)?;
    println!(
        "attack: {} ({})",
        attack.name(),
        attack.params()["construction"]
    );
    println!();

    println!("per-label marginals after the broadcast (trace distance to the input):");
    for (i, label) in protocol.labels().iter().enumerate() {
        let (bob, eve) = run(&protocol, &attack, label)?;
        // Receiver's first particle vs the clean reduction.
        let bob_first = bob.partial_trace(&[0])?;
        let d_bob = trace_distance(&bob_first, &family[i])?;
        // Adversary's copy vs the same reduction.
        let d_eve = trace_distance(&eve, &family[i])?;
        println!(
            "  label {}: receiver marginal {:.3e}, adversary copy {:.3e}",
            label, d_bob, d_eve
        );
        assert!(d_bob < 1e-10, "receiver marginal must be reproduced exactly");
        assert!(d_eve < 1e-10, "adversary marginal must be reproduced exactly");
    }

    let outcome = report(&protocol, &attack)?;
    println!();
    println!("but the composite state pays for it:");
    println!("  disturbance: {:.10}  (= sin²(2α)/2 at this angle: {:.10})", outcome.disturbance, (2.0 * FRAC_PI_6).sin().powi(2) / 2.0);
    println!("  QBER:        {:.10}", outcome.qber);
    println!("  eve guess:   {:.10}", outcome.eve_guess);
    assert!(outcome.disturbance > 1e-3);

    // --- π/4: identical reductions — broadcast by local preparation --
    let balanced = make_koashi_imoto(FRAC_PI_4)?;
    let family = reduced_family(&balanced.state_set(), 1)?;
    let attack = broadcast_attack(&family)?;
    let outcome = report(&balanced, &attack)?;
    println!();
    println!(
        "ki(π/4): reductions identical, construction `{}`",
        attack.params()["construction"]
    );
    println!(
        "  disturbance: {:e} (exactly zero — the signal is never touched)",
        outcome.disturbance
    );
    println!("  eve guess:   {:.10} (and exactly nothing is learned)", outcome.eve_guess);
    assert_eq!(outcome.disturbance, 0.0);
    assert!((outcome.eve_guess - 0.5).abs() < 1e-12);

    println!();
    println!("Broadcasting reproduces each *marginal* perfectly; cloning would have to");
    println!("reproduce the joint state. For commuting families the first is always");
    println!("possible — the second, as the π/6 disturbance shows, is not.");
    Ok(())
}
