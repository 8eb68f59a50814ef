//! Dirichlet parameters on frequency lattices: extraction, moments, samples.

use qru_spectrum::{LatticePoint, SpectrumKernel};
use rand::Rng;
use rand_distr::Gamma;
use statrs::function::gamma::ln_gamma;
use std::collections::BTreeMap;

/// Concentration parameters of a Dirichlet distribution over frequency
/// weights, indexed by lattice point.
#[derive(Debug, Clone)]
pub struct DirichletParams {
    alpha: BTreeMap<LatticePoint, f64>,
    alpha_sum: f64,
}

impl DirichletParams {
    /// Parameters from explicit concentrations; all entries must be
    /// strictly positive.
    pub fn new(alpha: BTreeMap<LatticePoint, f64>) -> Self {
        assert!(!alpha.is_empty(), "at least one concentration entry");
        assert!(
            alpha.values().all(|&a| a > 0.0 && a.is_finite()),
            "concentrations must be strictly positive"
        );
        let alpha_sum = alpha.values().sum();
        DirichletParams { alpha, alpha_sum }
    }

    pub fn alpha(&self) -> &BTreeMap<LatticePoint, f64> {
        &self.alpha
    }

    /// Total concentration, the 1-norm of alpha.
    pub fn alpha_sum(&self) -> f64 {
        self.alpha_sum
    }

    /// Mean weight at one lattice point: `alpha_i / ||alpha||_1`.
    pub fn mean(&self, point: &[i64]) -> f64 {
        self.alpha.get(point).map_or(0.0, |a| a / self.alpha_sum)
    }

    /// Variance of the weight at one lattice point:
    /// `mean (1 - mean) / (||alpha||_1 + 1)`.
    pub fn variance(&self, point: &[i64]) -> f64 {
        let mean = self.mean(point);
        mean * (1.0 - mean) / (self.alpha_sum + 1.0)
    }
}

/// Dirichlet parameters of a kernel's weight distribution:
/// `alpha_i = 2^n * w_i`.
///
/// The effective multiplicity count is the Hilbert-space dimension `2^n`;
/// a uniform kernel over `2^n` points then gives the uniform Dirichlet
/// (Porter-Thomas) over that many amplitudes.
pub fn params_from_kernel(kernel: &SpectrumKernel, n_qubits: usize) -> DirichletParams {
    let n_eff = (1u64 << n_qubits) as f64;
    let alpha = kernel
        .weights()
        .iter()
        .map(|(k, &w)| (k.clone(), n_eff * w))
        .collect();
    DirichletParams::new(alpha)
}

/// One Dirichlet sample: independent `Gamma(alpha_i, 1)` draws normalized by
/// their sum. Nonnegative, sums to 1.
pub fn dirichlet_sample(params: &DirichletParams, seed: u64) -> BTreeMap<LatticePoint, f64> {
    let mut rng = qru_algebra::rng::seeded_rng(seed);
    dirichlet_sample_from_rng(params, &mut rng)
}

/// Sampling variant for callers that manage their own generator streams.
pub fn dirichlet_sample_from_rng<R: Rng + ?Sized>(
    params: &DirichletParams,
    rng: &mut R,
) -> BTreeMap<LatticePoint, f64> {
    let mut draws: BTreeMap<LatticePoint, f64> = params
        .alpha
        .iter()
        .map(|(k, &a)| {
            let gamma = Gamma::new(a, 1.0).expect("positive shape");
            (k.clone(), rng.sample(gamma))
        })
        .collect();
    let total: f64 = draws.values().sum();
    if total > 0.0 {
        for value in draws.values_mut() {
            *value /= total;
        }
    } else {
        // All Gamma draws underflowed (possible for very small shapes);
        // fall back to the distribution mean.
        for (point, value) in draws.iter_mut() {
            *value = params.mean(point);
        }
    }
    draws
}

/// Mixed moment `E[prod_i x_i^{k_i}]` of a Dirichlet distribution:
///
/// `Gamma(A) / Gamma(A + |k|) * prod_i Gamma(alpha_i + k_i) / Gamma(alpha_i)`
///
/// with `A = ||alpha||_1`, evaluated in log-Gamma space so large total
/// concentrations do not overflow. Points absent from `orders` contribute
/// order zero.
pub fn dirichlet_moment(params: &DirichletParams, orders: &BTreeMap<LatticePoint, u64>) -> f64 {
    let total_order: u64 = orders.values().sum();
    if total_order == 0 {
        return 1.0;
    }
    let a_sum = params.alpha_sum;
    let mut log_moment = ln_gamma(a_sum) - ln_gamma(a_sum + total_order as f64);
    for (point, &order) in orders {
        if order == 0 {
            continue;
        }
        let alpha_i = *params
            .alpha
            .get(point)
            .unwrap_or_else(|| panic!("moment order at unpopulated point {point:?}"));
        log_moment += ln_gamma(alpha_i + order as f64) - ln_gamma(alpha_i);
    }
    log_moment.exp()
}
