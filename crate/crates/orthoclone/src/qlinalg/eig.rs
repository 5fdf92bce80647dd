//! Hermitian eigendecomposition via cyclic Jacobi rotations.
//!
//! The solver is self-contained on purpose: every verdict this crate
//! produces ultimately rests on spectra, so the path from matrix to
//! eigenvalues should be short enough to audit. Complex off-diagonal
//! entries are handled by absorbing their phase into the rotation, which
//! reduces each 2×2 pivot to the classic real symmetric case.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qlinalg::matrix::ComplexMatrix;
use crate::qlinalg::tol;

/// Maximum number of full Jacobi sweeps before giving up on further
/// refinement. In practice a handful suffice for the dimensions used here.
const MAX_SWEEPS: usize = 100;

/// Result of [`eig_hermitian`]: eigenvalues in descending order with the
/// matching orthonormal eigenvectors as matrix columns.
#[derive(Clone, Debug)]
pub struct EigDecomposition {
    /// Real eigenvalues, sorted descending.
    pub eigenvalues: Vec<f64>,
    /// Column `k` is the eigenvector for `eigenvalues[k]`. Each column's
    /// phase is normalised so its largest-magnitude component is real
    /// and positive, making the decomposition deterministic.
    pub eigenvectors: ComplexMatrix,
}

impl EigDecomposition {
    /// Rebuilds `V f(Λ) V†`; with the identity function this reconstructs
    /// the original matrix.
    pub fn map_eigenvalues(&self, f: impl Fn(f64) -> f64) -> ComplexMatrix {
        let n = self.eigenvalues.len();
        let v = &self.eigenvectors;
        let mut out = ComplexMatrix::zeros(n, n);
        for k in 0..n {
            let fk = f(self.eigenvalues[k]);
            if fk == 0.0 {
                continue;
            }
            for i in 0..n {
                let vik = v[(i, k)];
                if vik.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += vik * v[(j, k)].conj() * fk;
                }
            }
        }
        out
    }

    /// `V Λ V†`, which must equal the input matrix up to solver accuracy.
    pub fn reconstruct(&self) -> ComplexMatrix {
        self.map_eigenvalues(|x| x)
    }
}

/// Frobenius norm of the strictly off-diagonal part.
fn off_diagonal_norm(m: &ComplexMatrix) -> f64 {
    let n = m.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += m[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Diagonalises a Hermitian matrix.
///
/// The input must be Hermitian within [`tol::EQUALITY`]; its Hermitian
/// part is then taken exactly, so harmless last-bit asymmetry never leaks
/// into the spectrum. Iteration stops once the off-diagonal Frobenius
/// norm drops below [`tol::EIG_OFF_DIAGONAL`] or after 100 sweeps.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<EigDecomposition> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "eigendecomposition requires a square matrix, got {}×{}",
            m.rows(),
            m.cols()
        )));
    }
    let deviation = m.hermiticity_deviation();
    if deviation > tol::EQUALITY {
        return Err(Error::NotHermitian { deviation });
    }

    let n = m.rows();
    let mut a = m.hermitian_part();
    let mut v = ComplexMatrix::identity(n);

    for _sweep in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) < tol::EIG_OFF_DIAGONAL {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }

    // Extract and sort the spectrum, keeping columns attached.
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[j].total_cmp(&diag[i]));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut eigenvectors = ComplexMatrix::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        let column = normalise_phase(v.col(old_col));
        for i in 0..n {
            eigenvectors[(i, new_col)] = column[i];
        }
    }

    Ok(EigDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// One Jacobi rotation zeroing the `(p, q)` entry of `a`, accumulated
/// into `v`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r < 1e-300 {
        // Entry already (denormally) zero; rotating would divide by it.
        return;
    }
    let phase = apq / r; // e^{iφ} with a[p][q] = r e^{iφ}
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    // Solve t² − 2τt − 1 = 0 for the smaller-magnitude tangent; this is
    // the usual inner rotation for the phase-stripped real 2×2 block
    // [[app, r], [r, aqq]].
    let tau = (aqq - app) / (2.0 * r);
    let t = if tau >= 0.0 {
        -1.0 / (tau + (tau * tau + 1.0).sqrt())
    } else {
        1.0 / (-tau + (tau * tau + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // J differs from the identity only at (p,p)=c, (p,q)=−s,
    // (q,p)=e^{−iφ}s, (q,q)=e^{−iφ}c.
    let jqp = phase.conj() * s;
    let jqq = phase.conj() * c;

    let n = a.rows();
    // a ← J† a J, computed as two rank-2 column/row updates.
    for i in 0..n {
        let aip = a[(i, p)];
        let aiq = a[(i, q)];
        a[(i, p)] = aip * c + aiq * jqp;
        a[(i, q)] = -aip * s + aiq * jqq;
    }
    for j in 0..n {
        let apj = a[(p, j)];
        let aqj = a[(q, j)];
        a[(p, j)] = apj * c + aqj * jqp.conj();
        a[(q, j)] = -apj * s + aqj * jqq.conj();
    }
    // v ← v J.
    for i in 0..n {
        let vip = v[(i, p)];
        let viq = v[(i, q)];
        v[(i, p)] = vip * c + viq * jqp;
        v[(i, q)] = -vip * s + viq * jqq;
    }
}

/// Eigenvalues closer than this are treated as one degenerate block when
/// building a simultaneous eigenbasis.
const BLOCK_TOL: f64 = 1e-8;

/// An orthonormal basis (as matrix columns) that simultaneously
/// diagonalises a family of pairwise-commuting Hermitian matrices.
///
/// The construction is deterministic: diagonalise the mixture
/// `M = Σₖ πᵏ ρₖ` — the irrational weight keeps distinct joint spectra
/// from colliding by accident — then, inside each degenerate block of
/// `M`, refine with `ρ₁`, `ρ₂`, … in turn. (Within such a block every
/// earlier family member is an affine combination of the later ones, so
/// refining with the tail suffices.) Column order follows the descending
/// eigenvalues of `M`, then of each refiner; phases follow the solver's
/// convention.
pub fn simultaneous_eigenbasis(family: &[&ComplexMatrix]) -> Result<ComplexMatrix> {
    let first = family
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty family".into()))?;
    let n = first.rows();
    for m in family {
        if !m.is_square() || m.rows() != n {
            return Err(Error::DimensionMismatch(
                "family members must be square matrices of one dimension".into(),
            ));
        }
        let deviation = m.hermiticity_deviation();
        if deviation > tol::EQUALITY {
            return Err(Error::NotHermitian { deviation });
        }
    }
    for (i, a) in family.iter().enumerate() {
        for b in &family[i + 1..] {
            let ab = *a * *b;
            let ba = *b * *a;
            let dev = ab.max_abs_diff(&ba);
            if dev > tol::CLASSIFY {
                return Err(Error::NonCommutingFamily(format!(
                    "members {} and {} have commutator norm {:.3e}",
                    i,
                    i + 1,
                    dev
                )));
            }
        }
    }

    let mut mixture = ComplexMatrix::zeros(n, n);
    let mut weight = 1.0;
    for m in family {
        mixture = &mixture + &m.scaled_re(weight);
        weight *= std::f64::consts::PI;
    }
    let base = eig_hermitian(&mixture)?;
    let mut basis = base.eigenvectors;
    let mut blocks = split_blocks(&base.eigenvalues);

    for refiner in family.iter().skip(1) {
        let mut next_blocks = Vec::new();
        for (start, len) in blocks {
            if len == 1 {
                next_blocks.push((start, 1));
                continue;
            }
            // Project the refiner into the block and diagonalise there.
            let sub = ComplexMatrix::from_fn(len, len, |i, j| {
                let mut sum = Complex64::new(0.0, 0.0);
                for r in 0..n {
                    for c in 0..n {
                        sum += basis[(r, start + i)].conj() * refiner[(r, c)] * basis[(c, start + j)];
                    }
                }
                sum
            });
            let sub_eig = eig_hermitian(&sub)?;
            // basis[:, start..start+len] ← basis[:, start..start+len] · W
            let old: Vec<Vec<Complex64>> =
                (0..len).map(|k| basis.col(start + k)).collect();
            for k in 0..len {
                for r in 0..n {
                    let mut sum = Complex64::new(0.0, 0.0);
                    for m in 0..len {
                        sum += old[m][r] * sub_eig.eigenvectors[(m, k)];
                    }
                    basis[(r, start + k)] = sum;
                }
            }
            for (s, l) in split_blocks(&sub_eig.eigenvalues) {
                next_blocks.push((start + s, l));
            }
        }
        blocks = next_blocks;
    }

    for k in 0..n {
        let column = normalise_phase(basis.col(k));
        for r in 0..n {
            basis[(r, k)] = column[r];
        }
    }

    // The refinement above is exact for genuinely commuting families;
    // verify rather than trust.
    for (i, m) in family.iter().enumerate() {
        let conjugated = &(&basis.adjoint() * *m) * &basis;
        let mut off = 0.0f64;
        for r in 0..n {
            for c in 0..n {
                if r != c {
                    off = off.max(conjugated[(r, c)].norm());
                }
            }
        }
        if off > BLOCK_TOL {
            return Err(Error::NonCommutingFamily(format!(
                "member {} is not diagonal in the joint basis (residual {:.3e})",
                i, off
            )));
        }
    }
    Ok(basis)
}

/// Groups consecutive (descending) eigenvalues into `(start, len)` blocks
/// of near-equal value.
fn split_blocks(values: &[f64]) -> Vec<(usize, usize)> {
    let mut blocks = Vec::new();
    let mut start = 0;
    for i in 1..=values.len() {
        if i == values.len() || (values[i - 1] - values[i]).abs() > BLOCK_TOL {
            blocks.push((start, i - start));
            start = i;
        }
    }
    blocks
}

/// Rescales a unit vector by a global phase so that its largest-magnitude
/// component (first such, on ties) is real and positive.
fn normalise_phase(mut column: Vec<Complex64>) -> Vec<Complex64> {
    let mut best = 0usize;
    for (i, z) in column.iter().enumerate() {
        if z.norm() > column[best].norm() {
            best = i;
        }
    }
    let pivot = column[best];
    let norm = pivot.norm();
    if norm > 0.0 {
        let phase = pivot.conj() / norm;
        for z in &mut column {
            *z *= phase;
        }
    }
    column
}
