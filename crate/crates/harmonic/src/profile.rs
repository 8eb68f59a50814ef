//! Exact Fourier coefficients of the hypothesis function.

use crate::error::HarmonicError;
use crate::state::HarmonicState;
use num_complex::Complex64;
use qru_algebra::HermitianGenerator;
use qru_spectrum::{FrequencyLattice, LatticePoint};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Tolerance on the conjugate-symmetry invariant `a_{-w} = conj(a_w)`.
const SYMMETRY_TOL: f64 = 1e-10;

/// The Fourier side of a hypothesis function:
/// `h(x) = sum_w a_w exp(i mu.w x)` with `a_{-w} = conj(a_w)`.
#[derive(Debug, Clone)]
pub struct FrequencyProfile {
    lattice: FrequencyLattice,
    coefficients: BTreeMap<LatticePoint, Complex64>,
    observable_norm: f64,
}

impl FrequencyProfile {
    /// Assembles a profile from raw coefficients.
    ///
    /// The lattice hull is recomputed from the populated points and the
    /// conjugate-symmetry invariant `a_{-w} = conj(a_w)` is enforced.
    pub fn from_parts(
        mu: Vec<f64>,
        coefficients: BTreeMap<LatticePoint, Complex64>,
        observable_norm: f64,
    ) -> Result<Self, HarmonicError> {
        if !(observable_norm > 0.0 && observable_norm.is_finite()) {
            return Err(HarmonicError::InvalidProfile {
                reason: format!("observable norm {observable_norm} is not a positive real"),
            });
        }
        for point in coefficients.keys() {
            if point.len() != mu.len() {
                return Err(HarmonicError::DimensionMismatch {
                    context: format!("profile coefficient at {point:?}"),
                    expected: mu.len(),
                    got: point.len(),
                });
            }
        }
        let profile = FrequencyProfile {
            lattice: FrequencyLattice::hull(mu, coefficients.keys()),
            coefficients,
            observable_norm,
        };
        let deviation = conjugate_symmetry_deviation(&profile);
        if deviation > SYMMETRY_TOL {
            return Err(HarmonicError::InvalidProfile {
                reason: format!("conjugate symmetry deviates by {deviation:.3e}"),
            });
        }
        Ok(profile)
    }

    pub fn lattice(&self) -> &FrequencyLattice {
        &self.lattice
    }

    /// Fourier coefficients keyed by frequency lattice point.
    pub fn coefficients(&self) -> &BTreeMap<LatticePoint, Complex64> {
        &self.coefficients
    }

    /// Coefficient at one frequency, zero when absent.
    pub fn coefficient(&self, point: &[i64]) -> Complex64 {
        self.coefficients
            .get(point)
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Spectral norm of the measured observable.
    pub fn observable_norm(&self) -> f64 {
        self.observable_norm
    }

    /// Evaluates the trigonometric polynomial at `x`.
    ///
    /// Conjugate symmetry makes the sum real; the rounding remainder is
    /// discarded.
    pub fn evaluate(&self, x: f64) -> f64 {
        let mut sum = Complex64::new(0.0, 0.0);
        for (point, coeff) in &self.coefficients {
            sum += coeff * Complex64::from_polar(1.0, self.lattice.frequency(point) * x);
        }
        debug_assert!(
            sum.im.abs() <= 1e-9 * self.observable_norm.max(1.0),
            "profile evaluation has imaginary part {:.3e}",
            sum.im
        );
        sum.re
    }

    /// Total spectral power `sum_w |a_w|^2`.
    pub fn power(&self) -> f64 {
        self.coefficients.values().map(|a| a.norm_sqr()).sum()
    }

    /// Serializes to the documented JSON shape
    /// `{mu: [...], entries: [{k: [...], re: ..., im: ...}]}`.
    pub fn to_json(&self) -> Result<String, HarmonicError> {
        let shape = ProfileJson {
            mu: self.lattice.mu().to_vec(),
            entries: self
                .coefficients
                .iter()
                .map(|(k, a)| ProfileEntryJson {
                    k: k.clone(),
                    re: a.re,
                    im: a.im,
                })
                .collect(),
        };
        Ok(serde_json::to_string_pretty(&shape)?)
    }
}

#[derive(Serialize, Deserialize)]
struct ProfileJson {
    mu: Vec<f64>,
    entries: Vec<ProfileEntryJson>,
}

#[derive(Serialize, Deserialize)]
struct ProfileEntryJson {
    k: LatticePoint,
    re: f64,
    im: f64,
}

/// Measures an observable on a harmonic state, producing the exact Fourier
/// coefficients of `<psi(x)| H |psi(x)>`.
///
/// In H's eigenbasis with columns `d_k` and eigenvalues `lambda_j`,
/// `a_w = sum_j lambda_j sum_{k-l=w} d_{j,k} conj(d_{j,l})`; the frequency
/// support is the Minkowski difference of the populated lattice with itself.
pub fn measure_fourier(
    hs: &HarmonicState,
    observable: &HermitianGenerator,
) -> Result<FrequencyProfile, HarmonicError> {
    if observable.dim() != hs.dim() {
        return Err(HarmonicError::DimensionMismatch {
            context: format!("observable {}", observable.label()),
            expected: hs.dim(),
            got: observable.dim(),
        });
    }
    let basis_adjoint = observable.eigenvectors().adjoint();
    // Per populated point: the column in H's eigenbasis and that column
    // scaled by the eigenvalues.
    let rotated: Vec<(&LatticePoint, qru_algebra::ComplexVector, qru_algebra::ComplexVector)> = hs
        .coeffs()
        .iter()
        .map(|(point, column)| {
            let d = &basis_adjoint * column;
            let mut scaled = d.clone();
            for (j, entry) in scaled.iter_mut().enumerate() {
                *entry *= Complex64::new(observable.eigenvalues()[j], 0.0);
            }
            (point, d, scaled)
        })
        .collect();

    let mut coefficients: BTreeMap<LatticePoint, Complex64> = BTreeMap::new();
    for (k, _, scaled_k) in &rotated {
        for (l, d_l, _) in &rotated {
            let omega: LatticePoint = k.iter().zip(l.iter()).map(|(&a, &b)| a - b).collect();
            *coefficients.entry(omega).or_insert(Complex64::new(0.0, 0.0)) +=
                d_l.dotc(scaled_k);
        }
    }

    let profile = FrequencyProfile {
        lattice: FrequencyLattice::hull(hs.lattice().mu().to_vec(), coefficients.keys()),
        coefficients,
        observable_norm: observable.spectral_norm(),
    };
    debug_assert!(conjugate_symmetry_deviation(&profile) <= SYMMETRY_TOL);
    Ok(profile)
}

/// Largest deviation from `a_{-w} = conj(a_w)` over the profile's support.
pub fn conjugate_symmetry_deviation(profile: &FrequencyProfile) -> f64 {
    let mut worst = 0.0f64;
    for (point, coeff) in &profile.coefficients {
        let negated: LatticePoint = point.iter().map(|&k| -k).collect();
        let mirrored = profile.coefficient(&negated);
        worst = worst.max((mirrored.conj() - coeff).norm());
    }
    worst
}
