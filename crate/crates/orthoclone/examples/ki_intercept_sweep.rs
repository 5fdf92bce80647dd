//! Sweep the two-qubit key pair's angle under an intercept-resend attack
//! and compare the simulated eavesdropper advantage with the closed form.
//!
//! The `ki` protocol encodes its two key labels as
//!
//! ```text
//! |ψ0⟩ = cos α |0,1⟩ + sin α |1,0⟩
//! |ψ1⟩ = sin α |0,1⟩ − cos α |1,0⟩
//! ```
//!
//! An eavesdropper who measures the first particle in the computational
//! basis and resends it learns the label with probability
//!
//! ```text
//! P(guess) = 1/2 + |cos 2α| / 2
//! ```
//!
//! which is 1 at α = 0 (product states, fully readable) and falls to 1/2
//! (a coin flip) at α = π/4, where both labels leave the *same* reduced
//! state on each particle and the measurement captures nothing. The
//! attack also disturbs the signals everywhere except at the ends of the
//! sweep, which is what the receiver's error rate (QBER) records.
//!
//! The sweep runs over a grid of angles in parallel (honouring the
//! `ORTHOCLONE_THREADS` environment variable) and the example checks
//! every simulated point against the closed form to 1e-9.
//!
//! Run with:
//!
//! ```bash
//! cargo run -p orthoclone --example ki_intercept_sweep
//! ```

use orthoclone::adversary::AttackSpec;
use orthoclone::protocols::BasisSpec;
use orthoclone::simulator::{ki_alpha_grid, sweep};
use orthoclone::Result;
use std::f64::consts::FRAC_PI_2;

fn main() -> Result<()> {
    let alphas = ki_alpha_grid(0.0, FRAC_PI_2, 13)?;
    let spec = AttackSpec::InterceptResend {
        basis: BasisSpec::z(),
        round: 1,
    };

    println!("Intercept-resend (computational basis, round 1) against ki(α)");
    println!();
    println!(
        "{:>10} {:>14} {:>14} {:>12} {:>12}",
        "alpha", "eve guess", "closed form", "QBER", "disturbance"
    );

    let reports = sweep(&alphas, &spec)?;
    let mut worst = 0.0_f64;
    for (alpha, report) in alphas.iter().zip(&reports) {
        let analytic = 0.5 + 0.5 * (2.0 * alpha).cos().abs();
        let error = (report.eve_guess - analytic).abs();
        worst = worst.max(error);
        println!(
            "{:>10.6} {:>14.10} {:>14.10} {:>12.6} {:>12.6}",
            alpha, report.eve_guess, analytic, report.qber, report.disturbance
        );
    }

    println!();
    println!("max |simulated − closed form| over the grid: {:.3e}", worst);
    assert!(
        worst <= 1e-9,
        "simulated guess probability drifted from the closed form"
    );
    println!("every grid point matches 1/2 + |cos 2α|/2 to 1e-9");
    println!();
    println!("Endpoints are the clonable extremes: at α = 0 the attack reads the label");
    println!("perfectly without disturbing anything, and at α = π/4 it learns nothing.");
    println!("In between, information gain and disturbance trade off smoothly.");
    Ok(())
}
