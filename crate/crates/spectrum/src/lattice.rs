//! Integer frequency lattices with real base-frequency vectors.

use serde::{Deserialize, Serialize};

/// A point on the integer frequency lattice, one coordinate per dimension.
pub type LatticePoint = Vec<i64>;

/// Relative tolerance for comparing base frequencies.
const MU_TOL: f64 = 1e-9;

/// The integer lattice carrying frequency content.
///
/// Physical frequencies are `mu . k` for integer vectors k; `bounds` is the
/// axis-aligned hull of the populated points. One dimension per base
/// frequency; anharmonic generators need `D > 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FrequencyLattice {
    mu: Vec<f64>,
    bounds: Vec<(i64, i64)>,
}

impl FrequencyLattice {
    /// Lattice with the given base frequencies and per-dimension bounds.
    pub fn new(mu: Vec<f64>, bounds: Vec<(i64, i64)>) -> Self {
        assert_eq!(mu.len(), bounds.len(), "one bound interval per dimension");
        assert!(mu.iter().all(|&m| m > 0.0), "base frequencies must be positive");
        Self { mu, bounds }
    }

    /// Lattice hull of an explicit point set.
    pub fn hull<'a>(mu: Vec<f64>, points: impl IntoIterator<Item = &'a LatticePoint>) -> Self {
        let dims = mu.len();
        let mut bounds = vec![(0i64, 0i64); dims];
        let mut first = true;
        for point in points {
            for (d, &coord) in point.iter().enumerate() {
                if first {
                    bounds[d] = (coord, coord);
                } else {
                    bounds[d].0 = bounds[d].0.min(coord);
                    bounds[d].1 = bounds[d].1.max(coord);
                }
            }
            first = false;
        }
        Self::new(mu, bounds)
    }

    /// Number of lattice dimensions D.
    pub fn dims(&self) -> usize {
        self.mu.len()
    }

    /// Base frequency vector.
    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    /// Per-dimension closed index intervals of the populated hull.
    pub fn bounds(&self) -> &[(i64, i64)] {
        &self.bounds
    }

    /// Physical frequency of a lattice point: the dot product `mu . k`.
    pub fn frequency(&self, point: &[i64]) -> f64 {
        self.mu
            .iter()
            .zip(point)
            .map(|(&m, &k)| m * k as f64)
            .sum()
    }

    /// Whether another lattice shares this one's dimension and base.
    pub fn compatible(&self, other: &FrequencyLattice) -> bool {
        mu_compatible(&self.mu, &other.mu)
    }
}

/// Whether two base-frequency vectors agree within relative tolerance.
pub fn mu_compatible(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len()
        && a.iter()
            .zip(b)
            .all(|(&x, &y)| (x - y).abs() <= MU_TOL * x.abs().max(1.0))
}
