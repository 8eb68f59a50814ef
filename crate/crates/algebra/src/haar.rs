//! Haar-random unitary sampling.

use crate::error::AlgebraError;
use crate::matrix::ComplexMatrix;
use crate::rng::seeded_rng;
use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

/// Samples a `dim x dim` unitary from the Haar measure, deterministically
/// for a fixed seed.
pub fn haar_unitary(dim: usize, seed: u64) -> Result<ComplexMatrix, AlgebraError> {
    let mut rng = seeded_rng(seed);
    haar_unitary_from_rng(dim, &mut rng)
}

/// Haar sampling from a caller-managed generator, for Monte-Carlo loops that
/// draw many unitaries per derived stream.
///
/// Uses the Ginibre-QR construction: fill a matrix with standard complex
/// Gaussians, take the QR decomposition, and absorb the phases of R's
/// diagonal into Q so the distribution is exactly Haar.
pub fn haar_unitary_from_rng<R: Rng + ?Sized>(
    dim: usize,
    rng: &mut R,
) -> Result<ComplexMatrix, AlgebraError> {
    if dim == 0 {
        return Err(AlgebraError::InvalidDimension {
            dim: 0,
            reason: "unitary dimension must be positive".into(),
        });
    }
    let ginibre = ComplexMatrix::from_fn(dim, dim, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
    });
    let qr = ginibre.qr();
    let q = qr.q();
    let r = qr.r();
    let mut unitary = q;
    for col in 0..dim {
        let diag = r[(col, col)];
        let phase = if diag.norm() > 0.0 {
            diag / diag.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        for row in 0..dim {
            unitary[(row, col)] *= phase;
        }
    }
    Ok(unitary)
}
