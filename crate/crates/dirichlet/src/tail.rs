//! Concentration tail bounds for the optimal Lipschitz constant.

use qru_spectrum::{power_convolve, SpectrumError, SpectrumKernel};

/// Confidence parameter of the refined per-coordinate weight threshold.
const EPSILON: f64 = 1e-10;

/// Physical frequencies below this count as the zero frequency.
const FREQ_TOL: f64 = 1e-12;

/// Which martingale-range estimate feeds the Hoeffding-type bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailMode {
    /// Every frequency coordinate ranges over its full envelope: the
    /// denominator grows like `(2 L ||g||)^3 / 3`, cubic in depth.
    Coarse,
    /// Each coordinate's range shrinks to the Dirichlet quantile
    /// `x_M(alpha, epsilon)` that it exceeds with probability below
    /// epsilon; far-tail frequencies then contribute nothing.
    Refined,
}

/// Tail bound on the optimal Lipschitz constant exceeding its anchor by
/// `t`: `P(Lambda - anchor >= t) <= (1/2) exp(-t^2 / S)`.
///
/// `S` sums squared physical frequencies of the `2L`-fold self-convolved
/// kernel (the spectrum of `|a_w|^2`-weight pairs), each scaled by the
/// coordinate's range per [`TailMode`]. `t` and `S` are in physical
/// frequency units; observable norms are the caller's concern.
pub fn tail_bound(
    t: f64,
    kernel: &SpectrumKernel,
    depth: usize,
    mode: TailMode,
) -> Result<f64, SpectrumError> {
    assert!(t >= 0.0, "deviation must be nonnegative");
    let denominator = tail_denominator(kernel, depth, mode)?;
    if denominator <= 0.0 {
        return Ok(if t > 0.0 { 0.0 } else { 0.5 });
    }
    Ok(0.5 * (-t * t / denominator).exp())
}

/// The denominator `S = sum_w (range_w)^2` of [`tail_bound`], exposed so
/// sweeps over many `t` values convolve only once.
pub fn tail_denominator(
    kernel: &SpectrumKernel,
    depth: usize,
    mode: TailMode,
) -> Result<f64, SpectrumError> {
    assert!(depth >= 1, "depth must be at least one");
    let convolved = power_convolve(kernel, 2 * depth)?;
    let lattice = convolved.lattice().clone();
    let sum = match mode {
        TailMode::Refined => convolved
            .weights()
            .iter()
            .map(|(point, &w)| {
                let omega = lattice.frequency(point);
                if omega > FREQ_TOL {
                    omega * omega * weight_threshold(w, EPSILON)
                } else {
                    0.0
                }
            })
            .sum::<f64>(),
        TailMode::Coarse => {
            // Full envelope: every lattice point of the support hull
            // contributes its squared frequency, populated or not.
            let mut sum = 0.0;
            let mut point: Vec<i64> = lattice.bounds().iter().map(|&(lo, _)| lo).collect();
            loop {
                let omega = lattice.frequency(&point);
                if omega > FREQ_TOL {
                    sum += omega * omega;
                }
                // Odometer increment over the hull box.
                let mut d = 0;
                loop {
                    if d == point.len() {
                        return Ok(2.0 * sum);
                    }
                    point[d] += 1;
                    if point[d] <= lattice.bounds()[d].1 {
                        break;
                    }
                    point[d] = lattice.bounds()[d].0;
                    d += 1;
                }
            }
        }
    };
    Ok(2.0 * sum)
}

/// The weight value a Dirichlet coordinate with concentration `alpha` stays
/// below with probability at least `1 - epsilon`:
/// `x_M = ((2^{-alpha} - epsilon)^{-1/alpha} - 1)^{-1}`, clamped to [0, 1]
/// and evaluated in log space so vanishing concentrations underflow to zero
/// instead of overflowing.
pub(crate) fn weight_threshold(alpha: f64, epsilon: f64) -> f64 {
    let base = 2f64.powf(-alpha) - epsilon;
    if base <= 0.0 {
        return 1.0;
    }
    let exponent = -base.ln() / alpha;
    if exponent > 700.0 {
        return 0.0;
    }
    let denominator = exponent.exp() - 1.0;
    if denominator <= 0.0 {
        return 1.0;
    }
    (1.0 / denominator).min(1.0)
}
