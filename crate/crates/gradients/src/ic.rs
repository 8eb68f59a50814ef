//! Information content of a landscape random walk, a gradient-norm proxy.

use crate::error::GradientsError;
use qru_algebra::rng::seeded_rng;
use qru_model::{hypothesis, QruModel};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::TAU;

/// Random-walk configuration: `n_steps` moves of `step_size` per coordinate
/// with independent uniform signs.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct WalkConfig {
    pub n_steps: usize,
    pub step_size: f64,
}

impl Default for WalkConfig {
    fn default() -> Self {
        Self {
            n_steps: 10_000,
            step_size: 0.05,
        }
    }
}

/// Acceptance thresholds spaced geometrically from 1e-4 to 10, dense enough
/// that the entropy peak is resolved to a few percent.
pub fn default_eps_grid() -> Vec<f64> {
    let n = 150;
    (0..n)
        .map(|i| 10f64.powf(-4.0 + 5.0 * i as f64 / (n - 1) as f64))
        .collect()
}

/// Information content per threshold, its maximizer, and the gradient proxy.
#[derive(Debug, Clone, Serialize)]
pub struct InformationContent {
    pub eps: Vec<f64>,
    pub ic: Vec<f64>,
    pub eps_max: f64,
    pub ic_max: f64,
    /// `eps_max * sqrt(m)`, the proxy for the mean gradient norm.
    pub grad_proxy: f64,
}

fn degenerate(eps_grid: &[f64]) -> InformationContent {
    InformationContent {
        eps: eps_grid.to_vec(),
        ic: vec![0.0; eps_grid.len()],
        eps_max: 0.0,
        ic_max: 0.0,
        grad_proxy: 0.0,
    }
}

/// Entropy over the six unequal consecutive-symbol pairs at one threshold.
///
/// Symbols are `sign(delta)` gated by `|delta| > eps`; probabilities are
/// conditional on a change of symbol, and the base-6 logarithm normalizes
/// the maximum to one.
fn entropy_at(deltas: &[f64], eps: f64) -> f64 {
    let symbol = |d: f64| -> i8 {
        if d > eps {
            1
        } else if d < -eps {
            -1
        } else {
            0
        }
    };
    let mut counts = [0usize; 9];
    let mut previous = symbol(deltas[0]);
    for &d in &deltas[1..] {
        let current = symbol(d);
        if current != previous {
            counts[((previous + 1) * 3 + current + 1) as usize] += 1;
        }
        previous = current;
    }
    let total: usize = counts.iter().sum();
    if total == 0 {
        return 0.0;
    }
    counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / total as f64;
            -p * p.ln() / 6f64.ln()
        })
        .sum()
}

/// Walks the landscape at fixed data `x` and measures the information
/// content of the normalized increment sequence.
///
/// `I(eps)` is the transition entropy after symbolizing increments by the
/// threshold `eps`; its maximizer estimates the scale of a typical
/// directional derivative, and `eps_max * sqrt(m)` estimates the mean
/// gradient norm. A walk whose increments all vanish carries no
/// information: every entry is zero and the proxy is zero.
pub fn information_content(
    model: &QruModel,
    x: f64,
    walk: &WalkConfig,
    eps_grid: &[f64],
    seed: u64,
) -> Result<InformationContent, GradientsError> {
    assert!(walk.n_steps >= 100, "walk too short to symbolize");
    assert!(walk.step_size > 0.0, "step size must be positive");
    assert!(!eps_grid.is_empty(), "threshold grid must be nonempty");
    assert!(
        eps_grid.iter().all(|&e| e > 0.0),
        "thresholds must be positive"
    );
    let m = model.n_params();
    if m == 0 {
        return Ok(degenerate(eps_grid));
    }

    let mut rng = seeded_rng(seed);
    let mut theta: Vec<f64> = (0..m).map(|_| rng.random_range(0.0..TAU)).collect();
    let norm = walk.step_size * (m as f64).sqrt();
    let mut values = Vec::with_capacity(walk.n_steps + 1);
    values.push(hypothesis(model, &theta, x)?);
    for _ in 0..walk.n_steps {
        for t in theta.iter_mut() {
            *t += if rng.random::<bool>() {
                walk.step_size
            } else {
                -walk.step_size
            };
        }
        values.push(hypothesis(model, &theta, x)?);
    }
    let deltas: Vec<f64> = values.windows(2).map(|w| (w[1] - w[0]) / norm).collect();
    if deltas.iter().all(|&d| d == 0.0) {
        return Ok(degenerate(eps_grid));
    }

    let ic: Vec<f64> = eps_grid
        .par_iter()
        .map(|&eps| entropy_at(&deltas, eps))
        .collect();
    let (best, &ic_max) = ic
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .expect("grid is nonempty");
    let eps_max = if ic_max > 0.0 { eps_grid[best] } else { 0.0 };
    Ok(InformationContent {
        eps: eps_grid.to_vec(),
        ic,
        eps_max,
        ic_max,
        grad_proxy: eps_max * (m as f64).sqrt(),
    })
}
