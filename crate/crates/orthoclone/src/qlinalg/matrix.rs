//! Dense complex matrices and tensor-product plumbing.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qlinalg::tol;

/// A dense complex matrix in row-major order.
///
/// This is the workhorse type of the crate. It is intentionally plain:
/// a shape and a `Vec<Complex64>`, with the handful of operations the
/// rest of the crate needs (products, adjoints, tensor products, and the
/// tensor-factor bookkeeping used to embed local operators into composite
/// systems).
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    /// An all-zero `rows × cols` matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    /// The `n × n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix entry by entry from a closure.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from nested row vectors. All rows must have the
    /// same length.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} entries, expected {}",
                    i,
                    r.len(),
                    ncols
                )));
            }
        }
        Ok(Self::from_fn(nrows, ncols, |i, j| rows[i][j]))
    }

    /// A diagonal matrix with the given real diagonal.
    pub fn from_real_diag(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Complex64::new(diag[i], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    /// The outer product `u v†` of two column vectors.
    pub fn outer(u: &[Complex64], v: &[Complex64]) -> Self {
        Self::from_fn(u.len(), v.len(), |i, j| u[i] * v[j].conj())
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// True when the matrix is square.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Column `j` as an owned vector.
    pub fn col(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// The trace (sum of diagonal entries). Requires a square matrix.
    pub fn trace(&self) -> Complex64 {
        debug_assert!(self.is_square());
        (0..self.rows).map(|i| self[(i, i)]).sum()
    }

    /// The conjugate transpose `M†`.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    /// The matrix scaled by a complex factor.
    pub fn scaled(&self, factor: Complex64) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| self[(i, j)] * factor)
    }

    /// The matrix scaled by a real factor.
    pub fn scaled_re(&self, factor: f64) -> Self {
        self.scaled(Complex64::new(factor, 0.0))
    }

    /// Matrix-vector product `M x`.
    pub fn apply(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}×{} but vector has length {}",
                self.rows,
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * x[j]).sum())
            .collect())
    }

    /// Kronecker (tensor) product `self ⊗ other`, with `self` as the most
    /// significant factor.
    pub fn tensor(&self, other: &Self) -> Self {
        let (ra, ca) = (self.rows, self.cols);
        let (rb, cb) = (other.rows, other.cols);
        Self::from_fn(ra * rb, ca * cb, |i, j| {
            self[(i / rb, j / cb)] * other[(i % rb, j % cb)]
        })
    }

    /// Largest absolute entry of `self - other`. Panics on shape mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "max_abs_diff requires equal shapes"
        );
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest absolute entry of the matrix itself.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest absolute entry of `M - M†`; zero for exactly Hermitian input.
    pub fn hermiticity_deviation(&self) -> f64 {
        debug_assert!(self.is_square());
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// True when `M = M†` within `tolerance`.
    pub fn is_hermitian(&self, tolerance: f64) -> bool {
        self.is_square() && self.hermiticity_deviation() <= tolerance
    }

    /// Largest absolute entry of `U†U - I`; zero for exactly unitary input.
    pub fn unitarity_deviation(&self) -> f64 {
        debug_assert!(self.is_square());
        let gram = &self.adjoint() * self;
        gram.max_abs_diff(&Self::identity(self.rows))
    }

    /// Checks `U†U = I` within [`tol::EQUALITY`], returning the matrix on
    /// success so the check can be chained.
    pub fn checked_unitary(self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "unitary must be square, got {}×{}",
                self.rows, self.cols
            )));
        }
        let deviation = self.unitarity_deviation();
        if deviation > tol::EQUALITY {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(self)
    }

    /// The Hermitian part `(M + M†)/2`.
    pub fn hermitian_part(&self) -> Self {
        let adj = self.adjoint();
        Self::from_fn(self.rows, self.cols, |i, j| {
            (self[(i, j)] + adj[(i, j)]) * 0.5
        })
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in +");
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in -");
        ComplexMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)] - rhs[(i, j)])
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "shape mismatch in *: {}×{} by {}×{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out = ComplexMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}×{}", self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:+.4}{:+.4}i", z.re, z.im)?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Big-endian strides for a list of factor dimensions: `strides[k]` is the
/// index weight of factor `k`.
pub(crate) fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![1usize; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        s[k] = s[k + 1] * dims[k + 1];
    }
    s
}

/// Total dimension of a tensor product (1 for an empty factor list).
pub(crate) fn total_dim(dims: &[usize]) -> usize {
    dims.iter().product()
}

/// Splits a flat basis index into per-factor digits (big-endian).
pub(crate) fn decode_index(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let s = strides(dims);
    let mut digits = Vec::with_capacity(dims.len());
    for k in 0..dims.len() {
        digits.push(index / s[k]);
        index %= s[k];
    }
    digits
}

/// Recombines per-factor digits into a flat basis index (big-endian).
pub(crate) fn encode_index(digits: &[usize], dims: &[usize]) -> usize {
    let s = strides(dims);
    digits.iter().zip(&s).map(|(d, w)| d * w).sum()
}

fn check_factors(dims: &[usize], factors: &[usize]) -> Result<()> {
    if factors.is_empty() {
        return Err(Error::InvalidArgument(
            "factor list must not be empty".into(),
        ));
    }
    for (pos, &f) in factors.iter().enumerate() {
        if f >= dims.len() {
            return Err(Error::InvalidArgument(format!(
                "factor index {} out of range for {} factors",
                f,
                dims.len()
            )));
        }
        if factors[..pos].contains(&f) {
            return Err(Error::InvalidArgument(format!(
                "factor index {} repeated",
                f
            )));
        }
    }
    Ok(())
}

/// Embeds an operator acting on a subset of tensor factors into the full
/// space, acting as identity on the remaining factors.
///
/// `factors` lists the factor indices (0-based, in the order the operator's
/// own index digits are interpreted); `op` must be square with dimension
/// equal to the product of the selected factor dimensions.
pub fn embed_operator(
    op: &ComplexMatrix,
    dims: &[usize],
    factors: &[usize],
) -> Result<ComplexMatrix> {
    check_factors(dims, factors)?;
    let acting_dims: Vec<usize> = factors.iter().map(|&f| dims[f]).collect();
    let acting_total = total_dim(&acting_dims);
    if !op.is_square() || op.rows() != acting_total {
        return Err(Error::DimensionMismatch(format!(
            "operator is {}×{} but selected factors span dimension {}",
            op.rows(),
            op.cols(),
            acting_total
        )));
    }

    let rest: Vec<usize> = (0..dims.len()).filter(|k| !factors.contains(k)).collect();
    let rest_dims: Vec<usize> = rest.iter().map(|&f| dims[f]).collect();
    let rest_total = total_dim(&rest_dims);

    let total = total_dim(dims);
    let mut out = ComplexMatrix::zeros(total, total);
    let mut digits_row = vec![0usize; dims.len()];
    let mut digits_col = vec![0usize; dims.len()];
    for op_row in 0..acting_total {
        let row_digits = decode_index(op_row, &acting_dims);
        for op_col in 0..acting_total {
            let entry = op[(op_row, op_col)];
            if entry.norm_sqr() == 0.0 {
                continue;
            }
            let col_digits = decode_index(op_col, &acting_dims);
            for rest_idx in 0..rest_total {
                let rest_digits = decode_index(rest_idx, &rest_dims);
                for (pos, &f) in factors.iter().enumerate() {
                    digits_row[f] = row_digits[pos];
                    digits_col[f] = col_digits[pos];
                }
                for (pos, &f) in rest.iter().enumerate() {
                    digits_row[f] = rest_digits[pos];
                    digits_col[f] = rest_digits[pos];
                }
                let i = encode_index(&digits_row, dims);
                let j = encode_index(&digits_col, dims);
                out[(i, j)] = entry;
            }
        }
    }
    Ok(out)
}

/// The permutation matrix that swaps two tensor factors of equal dimension.
pub fn swap_factors(dims: &[usize], a: usize, b: usize) -> Result<ComplexMatrix> {
    check_factors(dims, &[a, b])?;
    if dims[a] != dims[b] {
        return Err(Error::DimensionMismatch(format!(
            "cannot swap factors of dimension {} and {}",
            dims[a], dims[b]
        )));
    }
    let total = total_dim(dims);
    let mut out = ComplexMatrix::zeros(total, total);
    for idx in 0..total {
        let mut digits = decode_index(idx, dims);
        digits.swap(a, b);
        out[(encode_index(&digits, dims), idx)] = Complex64::new(1.0, 0.0);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn tensor_is_big_endian() {
        // X ⊗ I on two qubits must map |0,k⟩ ↔ |1,k⟩, i.e. swap index
        // blocks {0,1} and {2,3}.
        let x = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let xi = x.tensor(&ComplexMatrix::identity(2));
        assert_eq!(xi[(0, 2)], c(1.0, 0.0));
        assert_eq!(xi[(1, 3)], c(1.0, 0.0));
        assert_eq!(xi[(0, 1)], c(0.0, 0.0));
    }

    #[test]
    fn index_round_trip() {
        let dims = [2usize, 3, 2];
        for idx in 0..12 {
            let digits = decode_index(idx, &dims);
            assert_eq!(encode_index(&digits, &dims), idx);
        }
        // First factor is most significant: index 6 of [2,3,2] is |1,0,0⟩.
        assert_eq!(decode_index(6, &dims), vec![1, 0, 0]);
    }

    #[test]
    fn embed_matches_explicit_tensor() {
        let u = ComplexMatrix::from_rows(&[
            vec![c(0.6, 0.0), c(0.0, -0.8)],
            vec![c(0.0, -0.8), c(0.6, 0.0)],
        ])
        .unwrap();
        // Embedding on factor 0 of [2, 3] must equal U ⊗ I₃.
        let embedded = embed_operator(&u, &[2, 3], &[0]).unwrap();
        let explicit = u.tensor(&ComplexMatrix::identity(3));
        assert!(embedded.max_abs_diff(&explicit) == 0.0);
        // Embedding on factor 1 of [3, 2] must equal I₃ ⊗ U.
        let embedded = embed_operator(&u, &[3, 2], &[1]).unwrap();
        let explicit = ComplexMatrix::identity(3).tensor(&u);
        assert!(embedded.max_abs_diff(&explicit) == 0.0);
    }

    #[test]
    fn embed_respects_factor_order() {
        // Embedding a two-factor operator with factors listed in reverse
        // order must equal conjugation by the swap permutation.
        let mut op = ComplexMatrix::zeros(4, 4);
        for (i, j) in [(0usize, 1usize), (1, 2), (2, 3), (3, 0)] {
            op[(i, j)] = c(1.0, 0.0);
        }
        let direct = embed_operator(&op, &[2, 2], &[1, 0]).unwrap();
        let swap = swap_factors(&[2, 2], 0, 1).unwrap();
        let expected = &(&swap * &op) * &swap;
        assert!(direct.max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn embed_rejects_bad_wiring() {
        let u = ComplexMatrix::identity(2);
        assert!(embed_operator(&u, &[2, 2], &[2]).is_err());
        assert!(embed_operator(&u, &[2, 2], &[0, 0]).is_err());
        assert!(embed_operator(&ComplexMatrix::identity(3), &[2, 2], &[0]).is_err());
    }

    #[test]
    fn swap_factors_is_self_inverse() {
        let s = swap_factors(&[2, 3, 2], 0, 2).unwrap();
        let ss = &s * &s;
        assert!(ss.max_abs_diff(&ComplexMatrix::identity(12)) == 0.0);
        assert!(swap_factors(&[2, 3], 0, 1).is_err());
    }

    #[test]
    fn unitarity_check() {
        let h = ComplexMatrix::from_fn(2, 2, |i, j| {
            let sign = if i == 1 && j == 1 { -1.0 } else { 1.0 };
            c(sign / 2f64.sqrt(), 0.0)
        });
        assert!(h.clone().checked_unitary().is_ok());
        let bad = h.scaled_re(1.0 + 1e-6);
        assert!(matches!(
            bad.checked_unitary(),
            Err(Error::NotUnitary { .. })
        ));
    }
}
