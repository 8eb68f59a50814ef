//! The spectrum kernel type and its extraction from generators.

use crate::error::SpectrumError;
use crate::lattice::{FrequencyLattice, LatticePoint};
use crate::mu::{detect_mu, solve_offsets};
use crate::KERNEL_CAPACITY;
use qru_algebra::{EigenGroup, HermitianGenerator};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Absolute tolerance on the weight-sum invariant at construction.
const WEIGHT_SUM_TOL: f64 = 1e-9;

/// Normalized eigenvalue multiplicities of a generator on its frequency
/// lattice: weight `m(lambda)/N` at the point k with `mu . k = lambda`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumKernel {
    lattice: FrequencyLattice,
    weights: BTreeMap<LatticePoint, f64>,
    source_dim: usize,
}

/// The per-eigenlevel lattice assignment of a generator: each degenerate
/// eigenvalue group paired with its integer offset vector.
///
/// This is what a data-encoding gate application consumes: the component on
/// eigenvector group `groups[i]` shifts frequency columns by `offsets[i]`.
#[derive(Debug, Clone)]
pub struct KernelMap {
    /// Base-frequency vector of the lattice.
    pub mu: Vec<f64>,
    /// Degenerate eigenvalue levels in ascending order.
    pub groups: Vec<EigenGroup>,
    /// Lattice offset of each level, parallel to `groups`.
    pub offsets: Vec<LatticePoint>,
}

impl SpectrumKernel {
    /// Kernel from explicit weights; validates positivity and normalization,
    /// then rescales so the weights sum to exactly one.
    pub fn new(
        mu: Vec<f64>,
        weights: BTreeMap<LatticePoint, f64>,
        source_dim: usize,
    ) -> Result<Self, SpectrumError> {
        if weights.is_empty() {
            return Err(SpectrumError::InvalidWeights {
                reason: "kernel must populate at least one lattice point".into(),
            });
        }
        if weights.len() > KERNEL_CAPACITY {
            return Err(SpectrumError::CapacityExceeded {
                points: weights.len(),
                cap: KERNEL_CAPACITY,
            });
        }
        let dims = mu.len();
        for (point, &weight) in &weights {
            if point.len() != dims {
                return Err(SpectrumError::InvalidWeights {
                    reason: format!("point {point:?} has {} coords, lattice has {dims}", point.len()),
                });
            }
            if !(weight > 0.0) || !weight.is_finite() {
                return Err(SpectrumError::InvalidWeights {
                    reason: format!("weight {weight} at {point:?} is not strictly positive"),
                });
            }
        }
        let total: f64 = weights.values().sum();
        if (total - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(SpectrumError::InvalidWeights {
                reason: format!("weights sum to {total}, expected 1"),
            });
        }
        let weights: BTreeMap<LatticePoint, f64> = weights
            .into_iter()
            .map(|(k, w)| (k, w / total))
            .collect();
        let lattice = FrequencyLattice::hull(mu, weights.keys());
        Ok(Self {
            lattice,
            weights,
            source_dim,
        })
    }

    /// The lattice this kernel lives on.
    pub fn lattice(&self) -> &FrequencyLattice {
        &self.lattice
    }

    /// Normalized weights per populated lattice point.
    pub fn weights(&self) -> &BTreeMap<LatticePoint, f64> {
        &self.weights
    }

    /// Weight at one lattice point, zero when unpopulated.
    pub fn weight(&self, point: &[i64]) -> f64 {
        self.weights.get(point).copied().unwrap_or(0.0)
    }

    /// Dimension N of the source matrix (per convolution factor).
    ///
    /// Convolved kernels keep the source dimension of their factors; the
    /// Dirichlet layer takes its concentration scale separately.
    pub fn source_dim(&self) -> usize {
        self.source_dim
    }

    /// Number of populated lattice points.
    pub fn support_size(&self) -> usize {
        self.weights.len()
    }

    /// Serializes to the documented JSON shape
    /// `{mu: [...], N: ..., weights: [{k: [...], w: ...}]}`.
    pub fn to_json(&self) -> Result<String, SpectrumError> {
        let shape = KernelJson {
            mu: self.lattice.mu().to_vec(),
            n: self.source_dim,
            weights: self
                .weights
                .iter()
                .map(|(k, &w)| KernelEntryJson { k: k.clone(), w })
                .collect(),
        };
        Ok(serde_json::to_string_pretty(&shape)?)
    }

    /// Deserializes the JSON shape produced by [`SpectrumKernel::to_json`].
    pub fn from_json(text: &str) -> Result<Self, SpectrumError> {
        let shape: KernelJson = serde_json::from_str(text)?;
        let weights = shape
            .weights
            .into_iter()
            .map(|entry| (entry.k, entry.w))
            .collect();
        Self::new(shape.mu, weights, shape.n)
    }
}

#[derive(Serialize, Deserialize)]
struct KernelJson {
    mu: Vec<f64>,
    #[serde(rename = "N")]
    n: usize,
    weights: Vec<KernelEntryJson>,
}

#[derive(Serialize, Deserialize)]
struct KernelEntryJson {
    k: LatticePoint,
    w: f64,
}

/// Assigns every degenerate eigenvalue level of `g` its lattice offset.
///
/// Without a hint the base frequency is detected from the spectrum (harmonic
/// generators only); anharmonic spectra need the caller to supply the `mu`
/// basis, e.g. `[sqrt(2), 1]`.
pub fn kernel_map(
    g: &HermitianGenerator,
    mu_hint: Option<&[f64]>,
) -> Result<KernelMap, SpectrumError> {
    let groups = g.eigen_groups();
    let values: Vec<f64> = groups.iter().map(|group| group.value).collect();
    let mu: Vec<f64> = match mu_hint {
        Some(basis) => basis.to_vec(),
        None => vec![detect_mu(&values, g.label())?],
    };
    let offsets = solve_offsets(&values, &mu, g.label())?;
    Ok(KernelMap {
        mu,
        groups,
        offsets,
    })
}

/// Extracts the spectrum kernel of `g`: multiplicities of each eigenvalue
/// level normalized by the matrix dimension, on the detected (or hinted)
/// lattice.
pub fn extract_kernel(
    g: &HermitianGenerator,
    mu_hint: Option<&[f64]>,
) -> Result<SpectrumKernel, SpectrumError> {
    let map = kernel_map(g, mu_hint)?;
    let dim = g.dim();
    let mut weights: BTreeMap<LatticePoint, f64> = BTreeMap::new();
    for (group, offset) in map.groups.iter().zip(&map.offsets) {
        *weights.entry(offset.clone()).or_insert(0.0) += group.multiplicity() as f64 / dim as f64;
    }
    SpectrumKernel::new(map.mu, weights, dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use qru_algebra::{build_generator, GeneratorSpec, Pauli};

    #[test]
    fn pauli_z_kernel() {
        let g = build_generator(&GeneratorSpec::Collective(Pauli::Z), 1).unwrap();
        let kernel = extract_kernel(&g, None).unwrap();
        assert_abs_diff_eq!(kernel.lattice().mu()[0], 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(kernel.weight(&[-1]), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(kernel.weight(&[1]), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn shifted_half_z_kernel() {
        let g = build_generator(&GeneratorSpec::Collective(Pauli::Z), 1)
            .unwrap()
            .shifted(1.0)
            .scaled(0.5);
        let kernel = extract_kernel(&g, None).unwrap();
        assert_abs_diff_eq!(kernel.lattice().mu()[0], 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(kernel.weight(&[0]), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(kernel.weight(&[1]), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn collective_x_n4_kernel() {
        let g = build_generator(&GeneratorSpec::Collective(Pauli::X), 4).unwrap();
        let kernel = extract_kernel(&g, None).unwrap();
        assert_abs_diff_eq!(kernel.lattice().mu()[0], 2.0, epsilon = 1e-10);
        let expected = [1.0, 4.0, 6.0, 4.0, 1.0];
        for (k, want) in (-2..=2).zip(expected) {
            assert_abs_diff_eq!(kernel.weight(&[k]), want / 16.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn anharmonic_without_hint_errors() {
        let g = anharmonic_generator();
        let err = extract_kernel(&g, None);
        assert!(matches!(err, Err(SpectrumError::AnharmonicSpectrum { .. })));
    }

    #[test]
    fn anharmonic_with_hint_matches_tensor() {
        let g = anharmonic_generator();
        let kernel = extract_kernel(&g, Some(&[std::f64::consts::SQRT_2, 1.0])).unwrap();
        // Weights (1/8) * [[1,1,0],[1,2,1],[0,1,1]] over k in {-1,0,1}^2,
        // rows indexing the sqrt(2) coordinate.
        let expected = [
            (vec![-1, -1], 1.0),
            (vec![-1, 0], 1.0),
            (vec![0, -1], 1.0),
            (vec![0, 0], 2.0),
            (vec![0, 1], 1.0),
            (vec![1, 0], 1.0),
            (vec![1, 1], 1.0),
        ];
        assert_eq!(kernel.support_size(), expected.len());
        for (point, count) in expected {
            assert_abs_diff_eq!(kernel.weight(&point), count / 8.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn json_roundtrip() {
        let g = build_generator(&GeneratorSpec::Collective(Pauli::X), 3).unwrap();
        let kernel = extract_kernel(&g, None).unwrap();
        let text = kernel.to_json().unwrap();
        let back = SpectrumKernel::from_json(&text).unwrap();
        assert_eq!(kernel, back);
    }

    /// Diagonal generator with the two-dimensional example spectrum
    /// {+-(sqrt(2)+1), +-sqrt(2), +-1, 0 (twice)} on 8 dimensions.
    fn anharmonic_generator() -> HermitianGenerator {
        use num_complex::Complex64;
        let s = std::f64::consts::SQRT_2;
        let diag = [-(s + 1.0), -s, -1.0, 0.0, 0.0, 1.0, s, s + 1.0];
        let matrix = qru_algebra::ComplexMatrix::from_fn(8, 8, |r, c| {
            if r == c {
                Complex64::new(diag[r], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        build_generator(&GeneratorSpec::Explicit(matrix), 3).unwrap()
    }
}
