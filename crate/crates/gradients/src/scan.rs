//! Monte-Carlo scans of per-parameter gradient variances.

use crate::error::GradientsError;
use crate::sampler::{DataSampler, ThetaSampler};
use qru_algebra::rng::seeded_rng;
use qru_model::{gradient, QruModel};
use rayon::prelude::*;
use serde::Serialize;

/// Per-parameter gradient-variance estimates over the data distribution
/// and at the data origin.
///
/// `expected_variance[j]` estimates the data average of the parameter
/// variance of the j-th partial derivative; `variance_at_zero[j]` is the
/// same variance at `x = 0`. Their difference is what the absorption
/// witnesses bound.
#[derive(Debug, Clone, Serialize)]
pub struct VarianceScan {
    pub expected_variance: Vec<f64>,
    pub expected_variance_se: Vec<f64>,
    pub variance_at_zero: Vec<f64>,
    pub variance_at_zero_se: Vec<f64>,
    pub n_theta: usize,
    pub n_x: usize,
    /// Monte-Carlo estimate of the mean gradient norm over data and
    /// parameters, for cross-checking the information-content proxy.
    pub mean_grad_norm: f64,
    pub mean_grad_norm_se: f64,
}

impl VarianceScan {
    pub fn csv_header() -> &'static str {
        "param,expected_variance,expected_variance_se,variance_at_zero,variance_at_zero_se,n_theta,n_x"
    }

    /// One CSV row per parameter, matching [`VarianceScan::csv_header`].
    pub fn csv_rows(&self) -> Vec<String> {
        (0..self.expected_variance.len())
            .map(|j| {
                format!(
                    "{j},{},{},{},{},{},{}",
                    self.expected_variance[j],
                    self.expected_variance_se[j],
                    self.variance_at_zero[j],
                    self.variance_at_zero_se[j],
                    self.n_theta,
                    self.n_x
                )
            })
            .collect()
    }
}

struct BatchStats {
    variance: Vec<f64>,
    se: Vec<f64>,
    norms: Vec<f64>,
}

/// Unbiased per-parameter variances of one gradient batch at fixed `x`,
/// with standard errors from the fourth central moment.
fn gradient_batch(
    model: &QruModel,
    thetas: &[Vec<f64>],
    x: f64,
) -> Result<BatchStats, GradientsError> {
    let grads: Vec<Vec<f64>> = thetas
        .par_iter()
        .map(|theta| gradient(model, theta, x))
        .collect::<Result<_, _>>()?;
    let n = grads.len() as f64;
    let m = model.n_params();
    let mut variance = Vec::with_capacity(m);
    let mut se = Vec::with_capacity(m);
    for j in 0..m {
        let mean = grads.iter().map(|g| g[j]).sum::<f64>() / n;
        let centered: Vec<f64> = grads.iter().map(|g| g[j] - mean).collect();
        let var = centered.iter().map(|c| c * c).sum::<f64>() / (n - 1.0);
        let m4 = centered.iter().map(|c| c.powi(4)).sum::<f64>() / n;
        variance.push(var);
        se.push(((m4 - var * var).max(0.0) / n).sqrt());
    }
    let norms = grads
        .iter()
        .map(|g| g.iter().map(|v| v * v).sum::<f64>().sqrt())
        .collect();
    Ok(BatchStats {
        variance,
        se,
        norms,
    })
}

/// Scans gradient variances with a fresh parameter batch per data node.
///
/// Draws `n_x` nodes from the data distribution (a fixed dataset cycles
/// through its points), plus the origin `x = 0`; each node gets its own
/// `n_theta` parameter draws. The gradient-norm statistics pool the data
/// nodes only, so they estimate the norm under the data distribution.
pub fn variance_scan(
    model: &QruModel,
    theta_sampler: &ThetaSampler,
    data_sampler: &DataSampler,
    n_theta: usize,
    n_x: usize,
    seed: u64,
) -> Result<VarianceScan, GradientsError> {
    assert!(n_theta >= 2, "variance needs at least two parameter draws");
    assert!(n_x >= 1, "at least one data node");
    if theta_sampler.len() != model.n_params() {
        return Err(GradientsError::ArityMismatch {
            expected: model.n_params(),
            got: theta_sampler.len(),
        });
    }
    let mut rng = seeded_rng(seed);
    let draw = |rng: &mut _| -> Vec<Vec<f64>> {
        (0..n_theta).map(|_| theta_sampler.sample(rng)).collect()
    };

    let zero_batch = gradient_batch(model, &draw(&mut rng), 0.0)?;
    let nodes = data_sampler.nodes(n_x, &mut rng);
    let mut node_stats = Vec::with_capacity(n_x);
    for &x in &nodes {
        node_stats.push(gradient_batch(model, &draw(&mut rng), x)?);
    }

    let m = model.n_params();
    let nx = n_x as f64;
    let expected_variance: Vec<f64> = (0..m)
        .map(|j| node_stats.iter().map(|s| s.variance[j]).sum::<f64>() / nx)
        .collect();
    let expected_variance_se: Vec<f64> = (0..m)
        .map(|j| {
            (node_stats.iter().map(|s| s.se[j] * s.se[j]).sum::<f64>() / nx / nx).sqrt()
        })
        .collect();

    let norms: Vec<f64> = node_stats.iter().flat_map(|s| s.norms.clone()).collect();
    let count = norms.len() as f64;
    let mean_grad_norm = norms.iter().sum::<f64>() / count;
    let norm_var = norms
        .iter()
        .map(|v| (v - mean_grad_norm).powi(2))
        .sum::<f64>()
        / (count - 1.0);
    let mean_grad_norm_se = (norm_var / count).sqrt();

    Ok(VarianceScan {
        expected_variance,
        expected_variance_se,
        variance_at_zero: zero_batch.variance,
        variance_at_zero_se: zero_batch.se,
        n_theta,
        n_x,
        mean_grad_norm,
        mean_grad_norm_se,
    })
}
