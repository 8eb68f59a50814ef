//! Shared matrix/vector aliases and small helpers.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

/// Dense complex matrix, the working type for all unitaries and observables.
pub type ComplexMatrix = DMatrix<Complex64>;

/// Dense complex vector, the working type for statevectors.
pub type ComplexVector = DVector<Complex64>;

/// Identity matrix of the given dimension.
pub fn identity(dim: usize) -> ComplexMatrix {
    ComplexMatrix::identity(dim, dim)
}

/// Largest entry-wise absolute difference between two matrices.
///
/// Returns infinity when shapes differ so that callers comparing against a
/// tolerance fail loudly instead of panicking.
pub fn max_abs_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    if a.shape() != b.shape() {
        return f64::INFINITY;
    }
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// Whether `u` is unitary: max entry of |U U^dagger - I| at most `tol`.
pub fn is_unitary(u: &ComplexMatrix, tol: f64) -> bool {
    if !u.is_square() {
        return false;
    }
    let product = u * u.adjoint();
    max_abs_diff(&product, &identity(u.nrows())) <= tol
}

/// Whether `a` is Hermitian: max entry of |A - A^dagger| at most `tol`.
pub fn is_hermitian(a: &ComplexMatrix, tol: f64) -> bool {
    a.is_square() && max_abs_diff(a, &a.adjoint()) <= tol
}

/// Kronecker product of two matrices.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kronecker(b)
}
