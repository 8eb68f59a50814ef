//! Kernel moments and the Gaussian limit of convolved kernels.

use crate::kernel::SpectrumKernel;
use nalgebra::{DMatrix, DVector};

/// Parameters of the limiting Gaussian frequency envelope.
///
/// Convolving a kernel L times adds means and covariances, so the envelope
/// is N(L*m, L*Sigma) in lattice units. Centered (traceless) generators give
/// the zero-mean Gaussian of the theory; off-center kernels carry their
/// drift in `mean`.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianLimit {
    /// Mean vector in lattice units, length D.
    pub mean: DVector<f64>,
    /// Covariance matrix in lattice units, D x D.
    pub covariance: DMatrix<f64>,
}

impl GaussianLimit {
    /// Gaussian density at a lattice point (in lattice units).
    ///
    /// For D = 1 this is the familiar normal density; for higher D the
    /// covariance is inverted once per call, which is fine at D <= 3.
    pub fn density(&self, point: &[i64]) -> f64 {
        let d = self.mean.len();
        let x = DVector::from_fn(d, |i, _| point[i] as f64) - &self.mean;
        let inv = self
            .covariance
            .clone()
            .try_inverse()
            .expect("covariance must be non-singular for density evaluation");
        let det = self.covariance.determinant();
        let quad = (x.transpose() * inv * &x)[(0, 0)];
        let norm = ((2.0 * std::f64::consts::PI).powi(d as i32) * det).sqrt();
        (-0.5 * quad).exp() / norm
    }

    /// Variance in lattice units for one-dimensional lattices.
    pub fn variance_1d(&self) -> f64 {
        assert_eq!(self.covariance.nrows(), 1, "variance_1d needs D = 1");
        self.covariance[(0, 0)]
    }
}

/// First moment (mean vector) and second central moment (covariance) of a
/// kernel over lattice indices.
///
/// Values are in lattice units k; multiply by the base frequencies to get
/// physical frequency units.
pub fn kernel_moments(kernel: &SpectrumKernel) -> (DVector<f64>, DMatrix<f64>) {
    let d = kernel.lattice().dims();
    let mut mean = DVector::zeros(d);
    for (point, &w) in kernel.weights() {
        for (i, &coord) in point.iter().enumerate() {
            mean[i] += w * coord as f64;
        }
    }
    let mut covariance = DMatrix::zeros(d, d);
    for (point, &w) in kernel.weights() {
        for i in 0..d {
            let di = point[i] as f64 - mean[i];
            for j in 0..d {
                let dj = point[j] as f64 - mean[j];
                covariance[(i, j)] += w * di * dj;
            }
        }
    }
    (mean, covariance)
}

/// Gaussian-limit parameters of the L-fold convolution of `kernel`:
/// mean and covariance both scale linearly with L.
pub fn gaussian_limit(kernel: &SpectrumKernel, l: usize) -> GaussianLimit {
    let (mean, covariance) = kernel_moments(kernel);
    GaussianLimit {
        mean: mean * l as f64,
        covariance: covariance * l as f64,
    }
}

/// Total-variation distance between a kernel and a Gaussian limit sampled on
/// the kernel's populated lattice points:
/// `TV = (1/2) sum_k |w(k) - density(k)|`.
///
/// Density mass outside the kernel support is ignored; for the convolved
/// kernels this compares (their support already carries all but a vanishing
/// tail of the Gaussian) the restriction error is negligible against the
/// acceptance thresholds.
pub fn total_variation(kernel: &SpectrumKernel, limit: &GaussianLimit) -> f64 {
    0.5 * kernel
        .weights()
        .iter()
        .map(|(point, &w)| (w - limit.density(point)).abs())
        .sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convolve::power_convolve;
    use approx::assert_abs_diff_eq;
    use std::collections::BTreeMap;

    fn kernel_1d(entries: &[(i64, f64)]) -> SpectrumKernel {
        let weights: BTreeMap<_, _> = entries.iter().map(|&(k, w)| (vec![k], w)).collect();
        SpectrumKernel::new(vec![1.0], weights, entries.len()).unwrap()
    }

    #[test]
    fn symmetric_pair_has_unit_variance() {
        let k = kernel_1d(&[(-1, 0.5), (1, 0.5)]);
        let (mean, cov) = kernel_moments(&k);
        assert_abs_diff_eq!(mean[0], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(cov[(0, 0)], 1.0, epsilon = 1e-15);
    }

    #[test]
    fn collective_x_n4_variance_matches_quarter_n() {
        use qru_algebra::{build_generator, GeneratorSpec, Pauli};
        let g = build_generator(&GeneratorSpec::Collective(Pauli::X), 4).unwrap();
        let k = crate::extract_kernel(&g, None).unwrap();
        let (mean, cov) = kernel_moments(&k);
        assert_abs_diff_eq!(mean[0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(cov[(0, 0)], 1.0, epsilon = 1e-12);
    }

    #[test]
    fn flat_kernel_variance() {
        // Flat over n+1 = 5 points {-2..2}: variance (5^2 - 1)/12 = 2 in
        // lattice units, i.e. n(n+2)/12 of the symmetric model at n = 4.
        let k = kernel_1d(&[(-2, 0.2), (-1, 0.2), (0, 0.2), (1, 0.2), (2, 0.2)]);
        let (_, cov) = kernel_moments(&k);
        assert_abs_diff_eq!(cov[(0, 0)], 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(cov[(0, 0)], 4.0 * 6.0 / 12.0, epsilon = 1e-12);
    }

    #[test]
    fn gaussian_limit_scales_linearly() {
        let k = kernel_1d(&[(0, 0.5), (1, 0.5)]);
        let limit = gaussian_limit(&k, 100);
        assert_abs_diff_eq!(limit.mean[0], 50.0, epsilon = 1e-12);
        assert_abs_diff_eq!(limit.variance_1d(), 25.0, epsilon = 1e-12);
    }

    #[test]
    fn binomial_40_close_to_gaussian() {
        let k = kernel_1d(&[(0, 0.5), (1, 0.5)]);
        let convolved = power_convolve(&k, 40).unwrap();
        let limit = gaussian_limit(&k, 40);
        let tv = total_variation(&convolved, &limit);
        assert!(tv <= 0.05, "TV distance {tv} exceeds 0.05");
        // The distance is actually far below the acceptance line.
        assert!(tv <= 0.005, "TV distance {tv} unexpectedly large");
    }

    #[test]
    fn density_normalizes_roughly_on_fine_lattice() {
        let k = kernel_1d(&[(-1, 0.5), (1, 0.5)]);
        let limit = gaussian_limit(&k, 50);
        let total: f64 = (-200..=200).map(|i| limit.density(&[i])).sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-6);
    }
}
