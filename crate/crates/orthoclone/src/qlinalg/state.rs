//! Pure states, validated density matrices, and the partial trace.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qlinalg::eig::eig_hermitian;
use crate::qlinalg::matrix::{decode_index, encode_index, total_dim, ComplexMatrix};
use crate::qlinalg::tol;

/// A normalised state vector over a tensor product of factors.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    dims: Vec<usize>,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Wraps an amplitude vector, checking its length against `dims` and
    /// its norm against 1 (within [`tol::EQUALITY`]).
    pub fn new(dims: Vec<usize>, amplitudes: Vec<Complex64>) -> Result<Self> {
        let total = total_dim(&dims);
        if amplitudes.len() != total {
            return Err(Error::DimensionMismatch(format!(
                "factor dimensions {:?} require {} amplitudes, got {}",
                dims,
                total,
                amplitudes.len()
            )));
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr.sqrt() - 1.0).abs() > tol::EQUALITY {
            return Err(Error::InvalidState(format!(
                "state vector norm is {:.12}, expected 1",
                norm_sqr.sqrt()
            )));
        }
        Ok(PureState { dims, amplitudes })
    }

    /// The computational basis state with the given per-factor digits,
    /// e.g. `basis(&[2, 2], &[1, 0])` for `|1,0⟩`.
    pub fn basis(dims: &[usize], digits: &[usize]) -> Result<Self> {
        if digits.len() != dims.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} digits given for {} factors",
                digits.len(),
                dims.len()
            )));
        }
        for (k, (&d, &dim)) in digits.iter().zip(dims).enumerate() {
            if d >= dim {
                return Err(Error::InvalidArgument(format!(
                    "digit {} out of range for factor {} of dimension {}",
                    d, k, dim
                )));
            }
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); total_dim(dims)];
        amplitudes[encode_index(digits, dims)] = Complex64::new(1.0, 0.0);
        Ok(PureState {
            dims: dims.to_vec(),
            amplitudes,
        })
    }

    /// Builds a normalised superposition from `(coefficient, digits)`
    /// terms over computational basis states.
    pub fn superposition(dims: &[usize], terms: &[(Complex64, &[usize])]) -> Result<Self> {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); total_dim(dims)];
        for (coeff, digits) in terms {
            let basis = Self::basis(dims, digits)?;
            let idx = basis
                .amplitudes
                .iter()
                .position(|z| z.norm_sqr() > 0.0)
                .expect("basis state has one nonzero amplitude");
            amplitudes[idx] += *coeff;
        }
        Self::new(dims.to_vec(), amplitudes)
    }

    /// Tensor factor dimensions.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total Hilbert-space dimension.
    pub fn total_dim(&self) -> usize {
        self.amplitudes.len()
    }

    /// The raw amplitude vector, big-endian over factors.
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Inner product `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Result<Complex64> {
        if self.total_dim() != other.total_dim() {
            return Err(Error::DimensionMismatch(format!(
                "inner product of dimensions {} and {}",
                self.total_dim(),
                other.total_dim()
            )));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Tensor product, with `self` as the leading (most significant) factors.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut amplitudes = Vec::with_capacity(self.total_dim() * other.total_dim());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        PureState { dims, amplitudes }
    }

    /// The rank-one projector `|ψ⟩⟨ψ|`.
    pub fn outer(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes, &self.amplitudes)
    }

    /// The state as a density matrix.
    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix::new(self.dims.clone(), self.outer())
            .expect("projector of a normalised vector is a valid density matrix")
    }
}

/// A validated density matrix over a tensor product of factors.
///
/// Construction enforces the three defining properties — unit trace,
/// Hermiticity, and positive semidefiniteness (smallest eigenvalue no
/// lower than `-1e-10`) — so any value of this type can be trusted
/// downstream. Simulation code funnels every intermediate state through
/// this constructor rather than assuming algebra preserved validity.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    dims: Vec<usize>,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates and wraps a matrix as a density operator over `dims`.
    pub fn new(dims: Vec<usize>, matrix: ComplexMatrix) -> Result<Self> {
        let total = total_dim(&dims);
        if !matrix.is_square() || matrix.rows() != total {
            return Err(Error::DimensionMismatch(format!(
                "factor dimensions {:?} require a {}×{} matrix, got {}×{}",
                dims,
                total,
                total,
                matrix.rows(),
                matrix.cols()
            )));
        }
        let herm = matrix.hermiticity_deviation();
        if herm > tol::EQUALITY {
            return Err(Error::InvalidState(format!(
                "not Hermitian (max deviation {:.3e})",
                herm
            )));
        }
        let trace = matrix.trace();
        let trace_err = (trace - Complex64::new(1.0, 0.0)).norm();
        if trace_err > tol::EQUALITY {
            return Err(Error::InvalidState(format!(
                "trace is {:.12}+{:.12}i, expected 1",
                trace.re, trace.im
            )));
        }
        let eig = eig_hermitian(&matrix)?;
        let min = eig.eigenvalues.last().copied().unwrap_or(0.0);
        if min < -tol::EQUALITY {
            return Err(Error::InvalidState(format!(
                "negative eigenvalue {:.3e}",
                min
            )));
        }
        Ok(DensityMatrix { dims, matrix })
    }

    /// The trivial state on an empty factor list (total dimension 1).
    /// Used as the marginal of an adversary that keeps no ancilla.
    pub fn scalar() -> Self {
        DensityMatrix {
            dims: Vec::new(),
            matrix: ComplexMatrix::identity(1),
        }
    }

    /// The maximally mixed state `I/d` over the given factors.
    pub fn maximally_mixed(dims: &[usize]) -> Self {
        let d = total_dim(dims);
        DensityMatrix {
            dims: dims.to_vec(),
            matrix: ComplexMatrix::identity(d).scaled_re(1.0 / d as f64),
        }
    }

    /// A normalised convex mixture of states on identical factors.
    /// Weights are relative (they must be nonnegative with positive sum)
    /// and the result is normalised by their sum.
    pub fn mixture(parts: &[(f64, &DensityMatrix)]) -> Result<Self> {
        let (first, _) = parts
            .split_first()
            .ok_or_else(|| Error::InvalidArgument("mixture of zero states".into()))?;
        let dims = first.1.dims.clone();
        let mut weight_sum = 0.0;
        let total = total_dim(&dims);
        let mut acc = ComplexMatrix::zeros(total, total);
        for (w, state) in parts {
            if *w < 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "negative mixture weight {}",
                    w
                )));
            }
            if state.dims != dims {
                return Err(Error::DimensionMismatch(format!(
                    "mixture component on {:?}, expected {:?}",
                    state.dims, dims
                )));
            }
            acc = &acc + &state.matrix.scaled_re(*w);
            weight_sum += w;
        }
        if weight_sum <= 0.0 {
            return Err(Error::InvalidArgument(
                "mixture weights sum to zero".into(),
            ));
        }
        Self::new(dims, acc.scaled_re(1.0 / weight_sum))
    }

    /// Tensor factor dimensions.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total Hilbert-space dimension.
    pub fn total_dim(&self) -> usize {
        self.matrix.rows()
    }

    /// The underlying matrix.
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Conjugates the state by a unitary: `U ρ U†`. The operator is
    /// checked for unitarity and the result is re-validated.
    pub fn evolve(&self, u: &ComplexMatrix) -> Result<Self> {
        if u.rows() != self.total_dim() {
            return Err(Error::DimensionMismatch(format!(
                "operator is {}×{} but state has dimension {}",
                u.rows(),
                u.cols(),
                self.total_dim()
            )));
        }
        let u = u.clone().checked_unitary()?;
        let evolved = &(&u * &self.matrix) * &u.adjoint();
        Self::new(self.dims.clone(), evolved)
    }

    /// Tensor product, with `self` as the leading factors.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        DensityMatrix {
            dims,
            matrix: self.matrix.tensor(&other.matrix),
        }
    }

    /// Reduced state on the selected factors; see [`partial_trace`].
    pub fn partial_trace(&self, keep: &[usize]) -> Result<Self> {
        partial_trace(self, keep)
    }

    /// Eigendecomposition of the state.
    pub fn eig(&self) -> crate::qlinalg::EigDecomposition {
        eig_hermitian(&self.matrix).expect("validated density matrix is Hermitian")
    }

    /// A purification on doubled factors `[d, d]` where `d` is the total
    /// dimension: `Σᵢ √λᵢ |uᵢ⟩|i⟩`, with the state itself as the first
    /// factor's marginal. Deterministic via the solver's ordering and
    /// phase conventions.
    pub fn purify(&self) -> PureState {
        let d = self.total_dim();
        let eig = self.eig();
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); d * d];
        for k in 0..d {
            let weight = eig.eigenvalues[k].max(0.0).sqrt();
            if weight == 0.0 {
                continue;
            }
            for i in 0..d {
                amplitudes[i * d + k] = eig.eigenvectors[(i, k)] * weight;
            }
        }
        PureState::new(vec![d, d], amplitudes)
            .expect("purification of a unit-trace state is normalised")
    }
}

/// Traces out all factors not listed in `keep`.
///
/// `keep` must be a nonempty proper subset of the factor indices
/// (0-based); the reduced state keeps the surviving factors in their
/// original order regardless of the order given.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let dims = rho.dims();
    let n = dims.len();
    if keep.is_empty() {
        return Err(Error::InvalidArgument(
            "partial trace must keep at least one factor".into(),
        ));
    }
    let mut keep_sorted = keep.to_vec();
    keep_sorted.sort_unstable();
    keep_sorted.dedup();
    if keep_sorted.len() != keep.len() {
        return Err(Error::InvalidArgument(
            "kept factor indices must be distinct".into(),
        ));
    }
    if let Some(&bad) = keep_sorted.iter().find(|&&f| f >= n) {
        return Err(Error::InvalidArgument(format!(
            "kept factor {} out of range for {} factors",
            bad, n
        )));
    }
    if keep_sorted.len() == n {
        return Err(Error::InvalidArgument(
            "partial trace must trace out at least one factor".into(),
        ));
    }

    let traced: Vec<usize> = (0..n).filter(|f| !keep_sorted.contains(f)).collect();
    let keep_dims: Vec<usize> = keep_sorted.iter().map(|&f| dims[f]).collect();
    let traced_dims: Vec<usize> = traced.iter().map(|&f| dims[f]).collect();
    let keep_total = total_dim(&keep_dims);
    let traced_total = total_dim(&traced_dims);

    let mut out = ComplexMatrix::zeros(keep_total, keep_total);
    let mut row_digits = vec![0usize; n];
    let mut col_digits = vec![0usize; n];
    for kr in 0..keep_total {
        let kr_digits = decode_index(kr, &keep_dims);
        for kc in 0..keep_total {
            let kc_digits = decode_index(kc, &keep_dims);
            let mut sum = Complex64::new(0.0, 0.0);
            for t in 0..traced_total {
                let t_digits = decode_index(t, &traced_dims);
                for (pos, &f) in keep_sorted.iter().enumerate() {
                    row_digits[f] = kr_digits[pos];
                    col_digits[f] = kc_digits[pos];
                }
                for (pos, &f) in traced.iter().enumerate() {
                    row_digits[f] = t_digits[pos];
                    col_digits[f] = t_digits[pos];
                }
                sum += rho.matrix()[(
                    encode_index(&row_digits, dims),
                    encode_index(&col_digits, dims),
                )];
            }
            out[(kr, kc)] = sum;
        }
    }
    DensityMatrix::new(keep_dims, out)
}
