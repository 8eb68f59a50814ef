//! Base-frequency detection and lattice-coordinate solving.

use crate::error::SpectrumError;
use crate::lattice::LatticePoint;
use crate::MAX_DENOMINATOR;

/// Relative tolerance for treating an eigenvalue as sitting on the lattice.
const LATTICE_TOL: f64 = 1e-9;

/// Detects the largest base frequency mu such that every value in `values`
/// is an integer multiple of mu.
///
/// `values` are the distinct eigenvalue levels of a generator (any order).
/// The algorithm rationalizes pairwise gap ratios by continued fractions
/// with denominators up to [`MAX_DENOMINATOR`], then refines mu so the
/// absolute positions (not only the gaps) land on integers. Returns the
/// anharmonic error when no such mu exists, e.g. for gaps in ratio sqrt(2).
pub fn detect_mu(values: &[f64], label: &str) -> Result<f64, SpectrumError> {
    let scale = values.iter().fold(1.0f64, |m, &v| m.max(v.abs()));
    let tol = LATTICE_TOL * scale;
    let anharmonic = || SpectrumError::AnharmonicSpectrum {
        label: label.to_string(),
        max_denominator: MAX_DENOMINATOR,
    };

    let mut sorted: Vec<f64> = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    sorted.dedup_by(|a, b| (*a - *b).abs() <= tol);

    if sorted.len() == 1 {
        // A single level: zero means the trivial lattice, anything else is
        // its own base frequency with k = +-1.
        let v = sorted[0];
        return Ok(if v.abs() <= tol { 1.0 } else { v.abs() });
    }

    // Step 1: the gaps must be commensurate. Express every gap as a
    // rational multiple p/q of the smallest gap; the gap lattice spacing is
    // then d_min / lcm(q).
    let gaps: Vec<f64> = sorted.windows(2).map(|w| w[1] - w[0]).collect();
    let d_min = gaps.iter().cloned().fold(f64::INFINITY, f64::min);
    let mut lcm: u128 = 1;
    for &gap in &gaps {
        let ratio = gap / d_min;
        let (_, q) = rationalize(ratio, MAX_DENOMINATOR).ok_or_else(anharmonic)?;
        lcm = lcm_u128(lcm, q as u128);
        if lcm > MAX_DENOMINATOR as u128 {
            return Err(anharmonic());
        }
    }
    let mut mu = d_min / lcm as f64;

    // Step 2: anchor the lattice. The levels themselves must be integer
    // multiples of mu, so a fractional remainder of the lowest level forces
    // a finer subdivision mu / q.
    let remainder = sorted[0].rem_euclid(mu);
    let frac = remainder / mu;
    if frac > LATTICE_TOL && (1.0 - frac) > LATTICE_TOL {
        let (_, q) = rationalize(frac, MAX_DENOMINATOR).ok_or_else(anharmonic)?;
        if q > 1 {
            mu /= q as f64;
        }
    }

    // Step 3: verify every level and the index cap.
    let mut indices = Vec::with_capacity(sorted.len());
    for &v in &sorted {
        let k = (v / mu).round();
        if (v - k * mu).abs() > tol || k.abs() > MAX_DENOMINATOR as f64 {
            return Err(anharmonic());
        }
        indices.push(k as i64);
    }

    // Step 4: make mu the largest compatible base. If every index shares a
    // common divisor the lattice was over-subdivided; absorb it into mu.
    let common = indices
        .iter()
        .filter(|&&k| k != 0)
        .fold(0u64, |g, &k| gcd_u128(g as u128, k.unsigned_abs() as u128) as u64);
    if common > 1 {
        mu *= common as f64;
    }
    Ok(mu)
}

/// Finds the integer lattice point of each value on the basis `mu`.
///
/// Returns one coordinate vector per value with `mu . k = value` within
/// tolerance. With several dimensions the solution may be non-unique
/// (rationally related bases); the search returns the point minimizing the
/// coordinate 1-norm, ties broken lexicographically, so results are
/// deterministic.
pub fn solve_offsets(
    values: &[f64],
    mu: &[f64],
    label: &str,
) -> Result<Vec<LatticePoint>, SpectrumError> {
    assert!(!mu.is_empty(), "mu basis must be non-empty");
    let scale = values.iter().fold(1.0f64, |m, &v| m.max(v.abs()));
    let tol = LATTICE_TOL * scale;
    let mu_min = mu.iter().cloned().fold(f64::INFINITY, f64::min);
    let reach = (scale / mu_min).ceil() as i64 + 1;

    values
        .iter()
        .map(|&value| {
            search_point(value, mu, reach, tol).ok_or_else(|| SpectrumError::NoLatticeFit {
                label: label.to_string(),
                value,
                mu: mu.to_vec(),
            })
        })
        .collect()
}

/// Depth-first search over leading coordinates; the last coordinate is
/// solved by rounding. Candidates are visited in 1-norm order.
fn search_point(value: f64, mu: &[f64], reach: i64, tol: f64) -> Option<LatticePoint> {
    let mut best: Option<(i64, LatticePoint)> = None;
    let mut prefix = vec![0i64; mu.len()];
    search_rec(value, mu, reach, tol, 0, 0.0, &mut prefix, &mut best);
    best.map(|(_, point)| point)
}

#[allow(clippy::too_many_arguments)]
fn search_rec(
    value: f64,
    mu: &[f64],
    reach: i64,
    tol: f64,
    dim: usize,
    partial: f64,
    prefix: &mut LatticePoint,
    best: &mut Option<(i64, LatticePoint)>,
) {
    if dim == mu.len() - 1 {
        let k = ((value - partial) / mu[dim]).round();
        if k.abs() > reach as f64 {
            return;
        }
        let k = k as i64;
        if (partial + mu[dim] * k as f64 - value).abs() > tol {
            return;
        }
        prefix[dim] = k;
        let norm: i64 = prefix.iter().map(|c| c.abs()).sum();
        let better = match best {
            None => true,
            Some((best_norm, best_point)) => {
                norm < *best_norm || (norm == *best_norm && prefix.as_slice() < best_point.as_slice())
            }
        };
        if better {
            *best = Some((norm, prefix.clone()));
        }
        return;
    }
    let mut candidates: Vec<i64> = (-reach..=reach).collect();
    candidates.sort_by_key(|c| (c.abs(), *c));
    for k in candidates {
        prefix[dim] = k;
        search_rec(
            value,
            mu,
            reach,
            tol,
            dim + 1,
            partial + mu[dim] * k as f64,
            prefix,
            best,
        );
    }
}

/// Absolute acceptance tolerance (relative to |x|) for a rational fit.
const RATIONAL_TOL: f64 = 1e-10;

/// Significance factor: a convergent p/q counts as evidence of rationality
/// only when its residual beats the generic convergent scale 1/q^2 by this
/// factor. Every real number has convergents with residual about 1/q^2
/// (Khinchin), so matching that scale proves nothing; true rationals leave
/// only floating-point noise, orders of magnitude below it.
const RATIONAL_SIGNIFICANCE: f64 = 1e-4;

/// Continued-fraction rational approximation `x ~ p/q` with `q` capped.
///
/// Returns the first convergent whose residual is both below tolerance and
/// significantly better than the generic 1/q^2 approximation quality, or
/// None when the denominator cap is exhausted first. Irrational inputs like
/// sqrt(2) never clear the significance bar at any denominator.
fn rationalize(x: f64, max_denominator: u64) -> Option<(i64, u64)> {
    let scale = x.abs().max(1.0);
    let mut remainder = x;
    let (mut p_prev, mut q_prev) = (1i128, 0i128);
    let (mut p, mut q) = (remainder.floor() as i128, 1i128);
    loop {
        let residual = (x - p as f64 / q as f64).abs();
        let significant = residual * (q as f64) * (q as f64) <= RATIONAL_SIGNIFICANCE * scale;
        if residual <= RATIONAL_TOL * scale && significant {
            return Some((p as i64, q as u64));
        }
        let frac = remainder - remainder.floor();
        if frac.abs() < f64::EPSILON {
            return None;
        }
        remainder = 1.0 / frac;
        let a = remainder.floor() as i128;
        let p_next = a * p + p_prev;
        let q_next = a * q + q_prev;
        if q_next as u128 > max_denominator as u128 || q_next <= 0 {
            return None;
        }
        (p_prev, q_prev) = (p, q);
        (p, q) = (p_next, q_next);
    }
}

fn lcm_u128(a: u128, b: u128) -> u128 {
    a / gcd_u128(a, b) * b
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
