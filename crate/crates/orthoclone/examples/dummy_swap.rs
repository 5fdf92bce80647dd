//! Clone orthogonal *entangled* states perfectly with the dummy-swap
//! attack — and watch the construction refuse states it cannot handle.
//!
//! At α = π/4 the two-qubit key pair becomes the Bell-like pair
//!
//! ```text
//! |ψ0⟩ = (|0,1⟩ + |1,0⟩)/√2
//! |ψ1⟩ = (|0,1⟩ − |1,0⟩)/√2
//! ```
//!
//! Both labels leave the *identical* reduction I/2 on the first particle,
//! so measuring it is pointless — but that very identity is exploitable.
//! The adversary:
//!
//! 1. swaps the first flying particle into her lab and substitutes one
//!    half of her own locally prepared |ψ0⟩ (a "dummy" — it is
//!    indistinguishable, since the genuine reduction is I/2 too);
//! 2. when the second particle flies past, she holds the *complete*
//!    original pair, measures it in the {|ψ0⟩, |ψ1⟩} basis, and learns
//!    the label with certainty;
//! 3. conditioned on the outcome she rotates the dummy's partner into
//!    the right state and swaps it onto the channel.
//!
//! The receiver ends up with an exact copy of the signal, the adversary
//! keeps another — a perfect clone of either orthogonal entangled state,
//! with zero disturbance. No measurement statistics can reveal her.
//!
//! The same constructor rejects protocols whose signals are mixed or
//! whose first reductions differ between labels: the preconditions are
//! structural, not numerical accidents.
//!
//! Run with:
//!
//! ```bash
//! cargo run -p orthoclone --example dummy_swap
//! ```

use orthoclone::adversary::dummy_swap_attack;
use orthoclone::protocols::{make_koashi_imoto, make_minimal_mixed};
use orthoclone::simulator::{report, run};
use orthoclone::qlinalg::fidelity_pure;
use orthoclone::Result;
use std::f64::consts::FRAC_PI_4;

fn main() -> Result<()> {
    let protocol = make_koashi_imoto(FRAC_PI_4)?;
    let attack = dummy_swap_attack(&protocol)?;

    println!("dummy-swap against ki(π/4)");
    println!(
        "  ancilla: {:?} (the dummy pair), rounds: two {}-dimensional unitaries",
        attack.ancilla_dims(),
        attack
            .round1()
            .map(|u| u.rows())
            .unwrap_or(0)
    );
    println!();

    // Per-label proof of perfect cloning: Bob's delivered state and
    // Eve's retained pair both match the clean encoding with fidelity 1.
    for label in protocol.key_labels() {
        let (bob, eve) = run(&protocol, &attack, label)?;
        let clean = protocol
            .entry(label)?
            .prep
            .as_pure()
            .expect("ki signals are pure")
            .clone();
        let bob_f = fidelity_pure(&bob, &clean)?;
        let eve_f = fidelity_pure(&eve, &clean)?;
        println!(
            "  label {}: fidelity(receiver) = {:.15}, fidelity(adversary copy) = {:.15}",
            label, bob_f, eve_f
        );
        assert!((bob_f - 1.0).abs() < 1e-9);
        assert!((eve_f - 1.0).abs() < 1e-9);
    }

    let outcome = report(&protocol, &attack)?;
    println!();
    println!("aggregate report:");
    println!("  eve guess:   {:.12}  (certainty)", outcome.eve_guess);
    println!("  QBER:        {:.12}", outcome.qber);
    println!("  disturbance: {:.3e}  (zero up to roundoff)", outcome.disturbance);
    assert!((outcome.eve_guess - 1.0).abs() < 1e-9);
    assert!(outcome.disturbance < 1e-9);

    // The construction's preconditions, exercised.
    println!();
    println!("preconditions:");

    let generic = make_koashi_imoto(std::f64::consts::FRAC_PI_6)?;
    match dummy_swap_attack(&generic) {
        Err(e) => println!("  ki(π/6)  — rejected: {}", e),
        Ok(_) => unreachable!("ki(π/6) has distinguishable first reductions"),
    }

    let mixed = make_minimal_mixed();
    match dummy_swap_attack(&mixed) {
        Err(e) => println!("  minimal-mixed — rejected: {}", e),
        Ok(_) => unreachable!("minimal-mixed has a mixed signal"),
    }

    println!();
    println!("Orthogonality alone does not protect a composite signal: when the pieces");
    println!("are released one at a time and the first carries no label information,");
    println!("the adversary can stall, learn, and repair — a perfect clone of states");
    println!("that no single-shot measurement could distinguish midway.");
    Ok(())
}
