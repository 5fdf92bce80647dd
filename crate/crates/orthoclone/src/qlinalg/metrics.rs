//! Scalar comparisons between states: overlaps, distances, fidelities,
//! and optimal two-state discrimination.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qlinalg::eig::eig_hermitian;
use crate::qlinalg::matrix::ComplexMatrix;
use crate::qlinalg::state::{DensityMatrix, PureState};
use crate::qlinalg::tol;

fn check_same_dim(a: &DensityMatrix, b: &DensityMatrix) -> Result<()> {
    if a.total_dim() != b.total_dim() {
        return Err(Error::DimensionMismatch(format!(
            "states have dimensions {} and {}",
            a.total_dim(),
            b.total_dim()
        )));
    }
    Ok(())
}

/// The Hilbert–Schmidt overlap `Tr(ρσ)`, real and in `[0, 1]` for valid
/// states (up to numerical noise; no clamping is applied).
pub fn overlap(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    check_same_dim(a, b)?;
    let n = a.total_dim();
    let (ma, mb) = (a.matrix(), b.matrix());
    let mut tr = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for k in 0..n {
            tr += ma[(i, k)] * mb[(k, i)];
        }
    }
    Ok(tr.re)
}

/// The trace distance `½‖ρ − σ‖₁`, computed from the spectrum of the
/// (Hermitian) difference. Ranges from 0 (identical) to 1 (orthogonal
/// support).
pub fn trace_distance(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    check_same_dim(a, b)?;
    let diff = a.matrix() - b.matrix();
    let eig = eig_hermitian(&diff)?;
    Ok(0.5 * eig.eigenvalues.iter().map(|l| l.abs()).sum::<f64>())
}

/// Fidelity of a state against a pure reference: `⟨ψ|ρ|ψ⟩`.
pub fn fidelity_pure(rho: &DensityMatrix, psi: &PureState) -> Result<f64> {
    if rho.total_dim() != psi.total_dim() {
        return Err(Error::DimensionMismatch(format!(
            "state has dimension {} but reference has {}",
            rho.total_dim(),
            psi.total_dim()
        )));
    }
    let image = rho.matrix().apply(psi.amplitudes())?;
    let val: Complex64 = psi
        .amplitudes()
        .iter()
        .zip(&image)
        .map(|(a, b)| a.conj() * b)
        .sum();
    Ok(val.re)
}

/// Uhlmann fidelity `F(ρ, σ) = (Tr √(√ρ σ √ρ))²` between two mixed
/// states. Agrees with [`fidelity_pure`] when either argument is pure,
/// and equals 1 exactly when the states coincide.
pub fn fidelity(a: &DensityMatrix, b: &DensityMatrix) -> Result<f64> {
    check_same_dim(a, b)?;
    let sqrt_a = a.eig().map_eigenvalues(|l| l.max(0.0).sqrt());
    let inner = &(&sqrt_a * b.matrix()) * &sqrt_a;
    let eig = eig_hermitian(&inner)?;
    // Taking √ of an eigenvalue amplifies solver noise near zero
    // (√(1e-17) ≈ 3e-9), so eigenvalues below solver resolution are
    // treated as exact zeros.
    let root_sum: f64 = eig
        .eigenvalues
        .iter()
        .map(|l| if *l > tol::EIG_OFF_DIAGONAL { l.sqrt() } else { 0.0 })
        .sum();
    Ok(root_sum * root_sum)
}

/// Optimal single-measurement probability of correctly identifying which
/// of two states was prepared, given prior probability `prior_a` for the
/// first: `½(1 + ‖prior_a·ρ − (1−prior_a)·σ‖₁)`.
pub fn helstrom_guess(a: &DensityMatrix, b: &DensityMatrix, prior_a: f64) -> Result<f64> {
    check_same_dim(a, b)?;
    if !(0.0..=1.0).contains(&prior_a) {
        return Err(Error::InvalidArgument(format!(
            "prior probability {} outside [0, 1]",
            prior_a
        )));
    }
    let m = &a.matrix().scaled_re(prior_a) - &b.matrix().scaled_re(1.0 - prior_a);
    let eig = eig_hermitian(&m)?;
    let norm1: f64 = eig.eigenvalues.iter().map(|l| l.abs()).sum();
    Ok(0.5 * (1.0 + norm1))
}

/// The projector onto the nonnegative eigenspace of
/// `prior_a·ρ − (1−prior_a)·σ` — the measurement achieving
/// [`helstrom_guess`] (outcome inside the projector ⇒ guess the first
/// state).
pub fn helstrom_projector(
    a: &DensityMatrix,
    b: &DensityMatrix,
    prior_a: f64,
) -> Result<ComplexMatrix> {
    check_same_dim(a, b)?;
    if !(0.0..=1.0).contains(&prior_a) {
        return Err(Error::InvalidArgument(format!(
            "prior probability {} outside [0, 1]",
            prior_a
        )));
    }
    let m = &a.matrix().scaled_re(prior_a) - &b.matrix().scaled_re(1.0 - prior_a);
    let eig = eig_hermitian(&m)?;
    Ok(eig.map_eigenvalues(|l| if l >= 0.0 { 1.0 } else { 0.0 }))
}

/// True when `Tr(ρσ)` vanishes within `tolerance`.
pub fn is_orthogonal_with_tol(a: &DensityMatrix, b: &DensityMatrix, tolerance: f64) -> Result<bool> {
    Ok(overlap(a, b)?.abs() <= tolerance)
}

/// True when `Tr(ρσ)` vanishes within [`tol::CLASSIFY`].
pub fn is_orthogonal(a: &DensityMatrix, b: &DensityMatrix) -> Result<bool> {
    is_orthogonal_with_tol(a, b, tol::CLASSIFY)
}

/// True when the states agree entrywise within `tolerance`.
pub fn is_identical_with_tol(a: &DensityMatrix, b: &DensityMatrix, tolerance: f64) -> Result<bool> {
    check_same_dim(a, b)?;
    Ok(a.matrix().max_abs_diff(b.matrix()) <= tolerance)
}

/// True when the states agree entrywise within [`tol::CLASSIFY`].
pub fn is_identical(a: &DensityMatrix, b: &DensityMatrix) -> Result<bool> {
    is_identical_with_tol(a, b, tol::CLASSIFY)
}

/// True when the commutator `ρσ − σρ` vanishes entrywise within
/// `tolerance`.
pub fn commutes_with_tol(a: &DensityMatrix, b: &DensityMatrix, tolerance: f64) -> Result<bool> {
    check_same_dim(a, b)?;
    let ab = a.matrix() * b.matrix();
    let ba = b.matrix() * a.matrix();
    Ok(ab.max_abs_diff(&ba) <= tolerance)
}

/// True when the states commute within [`tol::CLASSIFY`].
pub fn commutes(a: &DensityMatrix, b: &DensityMatrix) -> Result<bool> {
    commutes_with_tol(a, b, tol::CLASSIFY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn diag(p: f64) -> DensityMatrix {
        DensityMatrix::new(vec![2], ComplexMatrix::from_real_diag(&[p, 1.0 - p])).unwrap()
    }

    fn pure_qubit(theta: f64) -> PureState {
        PureState::new(
            vec![2],
            vec![c(theta.cos(), 0.0), c(theta.sin(), 0.0)],
        )
        .unwrap()
    }

    #[test]
    fn overlap_of_mirrored_diagonals() {
        // diag(cos²α, sin²α) against diag(sin²α, cos²α) has overlap
        // 2sin²αcos²α = sin²(2α)/2; at α = π/6 that is 3/8.
        let alpha = std::f64::consts::FRAC_PI_6;
        let (cs, sn) = (alpha.cos().powi(2), alpha.sin().powi(2));
        let got = overlap(&diag(cs), &diag(sn)).unwrap();
        assert!((got - 0.375).abs() < 1e-12);
    }

    #[test]
    fn overlap_extremes() {
        let zero = pure_qubit(0.0).to_density();
        let one = pure_qubit(std::f64::consts::FRAC_PI_2).to_density();
        assert!((overlap(&zero, &zero).unwrap() - 1.0).abs() < 1e-14);
        assert!(overlap(&zero, &one).unwrap().abs() < 1e-14);
        let mixed = DensityMatrix::maximally_mixed(&[2]);
        assert!((overlap(&mixed, &mixed).unwrap() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn trace_distance_of_mirrored_diagonals() {
        // ½‖diag(p,1−p) − diag(1−p,p)‖₁ = |2p − 1|; at p = cos²(π/6)
        // this is exactly 1/2.
        let p = std::f64::consts::FRAC_PI_6.cos().powi(2);
        let got = trace_distance(&diag(p), &diag(1.0 - p)).unwrap();
        assert!((got - 0.5).abs() < 1e-12);
    }

    #[test]
    fn trace_distance_bounds() {
        let zero = pure_qubit(0.0).to_density();
        let one = pure_qubit(std::f64::consts::FRAC_PI_2).to_density();
        assert!(trace_distance(&zero, &zero).unwrap().abs() < 1e-14);
        assert!((trace_distance(&zero, &one).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fidelity_agrees_with_pure_reference() {
        let rho = DensityMatrix::mixture(&[
            (0.25, &pure_qubit(0.0).to_density()),
            (0.75, &pure_qubit(1.0).to_density()),
        ])
        .unwrap();
        let psi = pure_qubit(0.3);
        let direct = fidelity_pure(&rho, &psi).unwrap();
        let uhlmann = fidelity(&rho, &psi.to_density()).unwrap();
        assert!((direct - uhlmann).abs() < 1e-9);
        assert!((fidelity(&rho, &rho).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn fidelity_of_orthogonal_pures_vanishes() {
        let zero = pure_qubit(0.0).to_density();
        let one = pure_qubit(std::f64::consts::FRAC_PI_2).to_density();
        assert!(fidelity(&zero, &one).unwrap().abs() < 1e-9);
    }

    #[test]
    fn helstrom_known_values() {
        // Orthogonal pure states: perfectly distinguishable.
        let zero = pure_qubit(0.0).to_density();
        let one = pure_qubit(std::f64::consts::FRAC_PI_2).to_density();
        assert!((helstrom_guess(&zero, &one, 0.5).unwrap() - 1.0).abs() < 1e-12);
        // Identical states: coin flip.
        assert!((helstrom_guess(&zero, &zero, 0.5).unwrap() - 0.5).abs() < 1e-12);
        // Mirrored diagonals at p = cos²(π/6): ½ + ½|2p−1| = 3/4.
        let p = std::f64::consts::FRAC_PI_6.cos().powi(2);
        let got = helstrom_guess(&diag(p), &diag(1.0 - p), 0.5).unwrap();
        assert!((got - 0.75).abs() < 1e-12);
        // Degenerate prior: always guess the certain state.
        assert!((helstrom_guess(&zero, &one, 1.0).unwrap() - 1.0).abs() < 1e-12);
        assert!(helstrom_guess(&zero, &one, 1.5).is_err());
    }

    #[test]
    fn helstrom_projector_achieves_the_bound() {
        let a = diag(0.9);
        let b = pure_qubit(0.4).to_density();
        for prior in [0.2, 0.5, 0.8] {
            let p = helstrom_projector(&a, &b, prior).unwrap();
            // Success probability of the projective guess, computed
            // directly, must match the closed-form optimum.
            let tr_a = (&p * a.matrix()).trace().re;
            let tr_b = (&(&ComplexMatrix::identity(2) - &p) * b.matrix()).trace().re;
            let achieved = prior * tr_a + (1.0 - prior) * tr_b;
            let optimal = helstrom_guess(&a, &b, prior).unwrap();
            assert!(
                (achieved - optimal).abs() < 1e-10,
                "projector success {achieved} differs from bound {optimal}"
            );
        }
    }

    #[test]
    fn commutation_predicate() {
        let a = diag(0.75);
        let b = diag(0.25);
        assert!(commutes(&a, &b).unwrap());
        let plus = pure_qubit(std::f64::consts::FRAC_PI_4).to_density();
        assert!(!commutes(&a, &plus).unwrap());
    }

    proptest! {
        #[test]
        fn trace_distance_is_a_metric_sample(p in 0.0f64..1.0, q in 0.0f64..1.0, r in 0.0f64..1.0) {
            let (a, b, c3) = (diag(p), diag(q), diag(r));
            let dab = trace_distance(&a, &b).unwrap();
            let dba = trace_distance(&b, &a).unwrap();
            prop_assert!((dab - dba).abs() < 1e-12);
            prop_assert!(dab >= -1e-12 && dab <= 1.0 + 1e-12);
            let dac = trace_distance(&a, &c3).unwrap();
            let dcb = trace_distance(&c3, &b).unwrap();
            prop_assert!(dab <= dac + dcb + 1e-10);
        }

        #[test]
        fn helstrom_never_below_coin_flip(p in 0.0f64..1.0, q in 0.0f64..1.0) {
            let guess = helstrom_guess(&diag(p), &diag(q), 0.5).unwrap();
            prop_assert!(guess >= 0.5 - 1e-12);
            prop_assert!(guess <= 1.0 + 1e-12);
        }
    }
}
