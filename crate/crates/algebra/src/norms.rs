//! Schatten norms and free-function matrix exponentials.

use crate::error::AlgebraError;
use crate::generator::HermitianGenerator;
use crate::matrix::ComplexMatrix;

/// Which Schatten norm to take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchattenOrder {
    /// Sum of singular values (Schatten-1).
    Trace,
    /// Largest singular value (Schatten-infinity).
    Spectral,
}

/// Schatten norm of a square matrix via its singular values.
pub fn schatten_norm(a: &ComplexMatrix, order: SchattenOrder) -> Result<f64, AlgebraError> {
    if !a.is_square() {
        return Err(AlgebraError::NonSquare {
            rows: a.nrows(),
            cols: a.ncols(),
        });
    }
    let singular_values = a.clone().svd(false, false).singular_values;
    Ok(match order {
        SchattenOrder::Trace => singular_values.iter().sum(),
        SchattenOrder::Spectral => singular_values.iter().fold(0.0, |m, &v| m.max(v)),
    })
}

/// The unitary `exp(i * angle * A)` for a Hermitian matrix given directly.
///
/// Convenience wrapper that eigendecomposes on the spot; circuits that apply
/// the same generator repeatedly should hold a [`HermitianGenerator`] and
/// use its cached decomposition instead.
pub fn expm_i_matrix(a: &ComplexMatrix, angle: f64) -> Result<ComplexMatrix, AlgebraError> {
    let generator = HermitianGenerator::new(a.clone(), "expm_i_matrix")?;
    Ok(generator.expm_i(angle))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::identity;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    #[test]
    fn identity_norms() {
        let id = identity(4);
        assert_abs_diff_eq!(
            schatten_norm(&id, SchattenOrder::Trace).unwrap(),
            4.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            schatten_norm(&id, SchattenOrder::Spectral).unwrap(),
            1.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn diagonal_norms_are_abs_eigenvalues() {
        let d = ComplexMatrix::from_row_slice(
            2,
            2,
            &[
                Complex64::new(3.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(-1.0, 0.0),
            ],
        );
        assert_abs_diff_eq!(
            schatten_norm(&d, SchattenOrder::Trace).unwrap(),
            4.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            schatten_norm(&d, SchattenOrder::Spectral).unwrap(),
            3.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn non_square_rejected() {
        let m = ComplexMatrix::zeros(2, 3);
        assert!(matches!(
            schatten_norm(&m, SchattenOrder::Trace),
            Err(AlgebraError::NonSquare { .. })
        ));
    }

    #[test]
    fn spectral_norm_matches_max_abs_eigenvalue() {
        let g = crate::build_generator(&crate::GeneratorSpec::CyclicZz, 3).unwrap();
        let from_svd = schatten_norm(g.matrix(), SchattenOrder::Spectral).unwrap();
        assert_abs_diff_eq!(from_svd, g.spectral_norm(), epsilon = 1e-10);
    }
}
