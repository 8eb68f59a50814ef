//! Hermitian generators with cached eigendecompositions.

use crate::error::AlgebraError;
use crate::matrix::{is_hermitian, ComplexMatrix, ComplexVector};
use nalgebra::DVector;
use num_complex::Complex64;

/// Absolute tolerance for the Hermitian symmetry check.
const HERMITICITY_TOL: f64 = 1e-12;

/// Relative tolerance for grouping near-degenerate eigenvalues.
///
/// Eigenvalues within `1e-9 * max|lambda|` of each other are treated as one
/// level; this keeps multiplicity counting robust for spectrum kernels.
const DEGENERACY_REL_TOL: f64 = 1e-9;

/// One degenerate eigenvalue level: representative value and member indices.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenGroup {
    /// Mean eigenvalue of the group.
    pub value: f64,
    /// Indices into the sorted eigenvalue vector belonging to this level.
    pub indices: Vec<usize>,
}

impl EigenGroup {
    /// Number of eigenvectors sharing this level.
    pub fn multiplicity(&self) -> usize {
        self.indices.len()
    }
}

/// A Hermitian matrix with its eigendecomposition computed once and cached.
///
/// Houses the circuit ingredients: parameterized-gate generators, encoding
/// generators, and observables. Eigenvalues are sorted ascending and the
/// eigenvector columns are permuted to match.
#[derive(Debug, Clone)]
pub struct HermitianGenerator {
    matrix: ComplexMatrix,
    eigenvalues: DVector<f64>,
    eigenvectors: ComplexMatrix,
    label: String,
}

impl HermitianGenerator {
    /// Validates hermiticity, eigendecomposes, and caches the result.
    pub fn new(matrix: ComplexMatrix, label: impl Into<String>) -> Result<Self, AlgebraError> {
        let label = label.into();
        if !matrix.is_square() {
            return Err(AlgebraError::NonSquare {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        let deviation = crate::matrix::max_abs_diff(&matrix, &matrix.adjoint());
        if deviation > HERMITICITY_TOL {
            return Err(AlgebraError::NotHermitian { label, deviation });
        }
        debug_assert!(is_hermitian(&matrix, HERMITICITY_TOL));

        let eigen = matrix.clone().symmetric_eigen();
        let mut order: Vec<usize> = (0..eigen.eigenvalues.len()).collect();
        order.sort_by(|&a, &b| eigen.eigenvalues[a].total_cmp(&eigen.eigenvalues[b]));

        let dim = matrix.nrows();
        let eigenvalues = DVector::from_fn(dim, |i, _| eigen.eigenvalues[order[i]]);
        let mut eigenvectors = ComplexMatrix::zeros(dim, dim);
        for (sorted_col, &orig_col) in order.iter().enumerate() {
            eigenvectors.set_column(sorted_col, &eigen.eigenvectors.column(orig_col));
        }

        Ok(Self {
            matrix,
            eigenvalues,
            eigenvectors,
            label,
        })
    }

    /// The raw Hermitian matrix.
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Eigenvalues sorted ascending.
    pub fn eigenvalues(&self) -> &DVector<f64> {
        &self.eigenvalues
    }

    /// Orthonormal eigenvector columns, ordered like the eigenvalues.
    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    /// Human-readable tag carried through error messages and reports.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Matrix dimension (2^n for n-qubit generators).
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Largest absolute eigenvalue, the spectral norm for Hermitian matrices.
    pub fn spectral_norm(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0, |m, &v| m.max(v.abs()))
    }

    /// The unitary `exp(i * angle * G)` via eigenvalue exponentiation.
    pub fn expm_i(&self, angle: f64) -> ComplexMatrix {
        let dim = self.dim();
        let mut scaled = self.eigenvectors.clone();
        for col in 0..dim {
            let phase = Complex64::from_polar(1.0, self.eigenvalues[col] * angle);
            for row in 0..dim {
                scaled[(row, col)] *= phase;
            }
        }
        &scaled * self.eigenvectors.adjoint()
    }

    /// Applies `exp(i * angle * G)` to a vector without materializing the
    /// unitary: rotate into the eigenbasis, phase, rotate back.
    ///
    /// Three matrix-vector products instead of one matrix-matrix product,
    /// the dominant cost saving in statevector simulation.
    pub fn apply_expm_i(&self, angle: f64, vector: &ComplexVector) -> ComplexVector {
        let mut in_eigenbasis = self.eigenvectors.adjoint() * vector;
        for (i, component) in in_eigenbasis.iter_mut().enumerate() {
            *component *= Complex64::from_polar(1.0, self.eigenvalues[i] * angle);
        }
        &self.eigenvectors * in_eigenbasis
    }

    /// Generator scaled by a real factor; eigendata updated without re-solving.
    pub fn scaled(&self, factor: f64) -> Self {
        let matrix = self.matrix.map(|z| z * factor);
        let mut eigenvalues: Vec<f64> = self.eigenvalues.iter().map(|&v| v * factor).collect();
        let mut eigenvectors = self.eigenvectors.clone();
        if factor < 0.0 {
            eigenvalues.reverse();
            let dim = self.dim();
            let reversed = ComplexMatrix::from_fn(dim, dim, |r, c| eigenvectors[(r, dim - 1 - c)]);
            eigenvectors = reversed;
        }
        Self {
            matrix,
            eigenvalues: DVector::from_vec(eigenvalues),
            eigenvectors,
            label: format!("{}*{}", factor, self.label),
        }
    }

    /// Generator shifted by a real multiple of the identity.
    pub fn shifted(&self, offset: f64) -> Self {
        let dim = self.dim();
        let mut matrix = self.matrix.clone();
        for i in 0..dim {
            matrix[(i, i)] += Complex64::new(offset, 0.0);
        }
        Self {
            matrix,
            eigenvalues: self.eigenvalues.map(|v| v + offset),
            eigenvectors: self.eigenvectors.clone(),
            label: format!("{}+{}", self.label, offset),
        }
    }

    /// Eigenvalues grouped into degenerate levels.
    ///
    /// Consecutive sorted eigenvalues closer than `1e-9 * max|lambda|` join
    /// the same group; the group value is the member mean.
    pub fn eigen_groups(&self) -> Vec<EigenGroup> {
        let tol = DEGENERACY_REL_TOL * self.spectral_norm().max(1.0);
        let mut groups: Vec<EigenGroup> = Vec::new();
        for (i, &value) in self.eigenvalues.iter().enumerate() {
            match groups.last_mut() {
                Some(group) if (value - group.value).abs() <= tol => {
                    let n = group.indices.len() as f64;
                    group.value = (group.value * n + value) / (n + 1.0);
                    group.indices.push(i);
                }
                _ => groups.push(EigenGroup {
                    value,
                    indices: vec![i],
                }),
            }
        }
        groups
    }
}
