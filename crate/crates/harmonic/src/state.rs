//! The harmonic state: frequency-indexed coefficient columns.

use crate::error::HarmonicError;
use crate::{PRUNE_TOL, STATE_CAPACITY};
use num_complex::Complex64;
use qru_algebra::{ComplexMatrix, ComplexVector};
use qru_spectrum::{FrequencyLattice, LatticePoint};
use std::collections::BTreeMap;

/// Tolerance on the total-norm invariant.
const NORM_TOL: f64 = 1e-10;

/// A statevector resolved by frequency: `|psi(x)> = sum_k exp(i mu.k x) c_k`.
///
/// Each populated lattice point holds one coefficient column `c_k` of length
/// `2^n`. The columns of an initialized state carry total squared norm 1 and
/// every operation preserves it.
#[derive(Debug, Clone)]
pub struct HarmonicState {
    n_qubits: usize,
    lattice: FrequencyLattice,
    coeffs: BTreeMap<LatticePoint, ComplexVector>,
    capacity: usize,
}

impl HarmonicState {
    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn lattice(&self) -> &FrequencyLattice {
        &self.lattice
    }

    /// Coefficient columns keyed by lattice point.
    pub fn coeffs(&self) -> &BTreeMap<LatticePoint, ComplexVector> {
        &self.coeffs
    }

    /// Number of populated lattice points.
    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    /// Cap on populated lattice points for subsequent encodings.
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn set_capacity(&mut self, capacity: usize) {
        self.capacity = capacity;
    }

    /// Total norm `sqrt(sum_{j,k} |c_{j,k}|^2)`; 1 for any valid state.
    pub fn total_norm(&self) -> f64 {
        self.coeffs
            .values()
            .map(|c| c.norm_squared())
            .sum::<f64>()
            .sqrt()
    }

    /// Reconstructs the plain statevector at data value `x`.
    pub fn evaluate(&self, x: f64) -> ComplexVector {
        let mut state = ComplexVector::zeros(self.dim());
        for (point, column) in &self.coeffs {
            let phase = Complex64::from_polar(1.0, self.lattice.frequency(point) * x);
            state += column.map(|c| c * phase);
        }
        state
    }

    pub(crate) fn from_parts(
        n_qubits: usize,
        mu: Vec<f64>,
        coeffs: BTreeMap<LatticePoint, ComplexVector>,
        capacity: usize,
    ) -> Self {
        let lattice = if coeffs.is_empty() {
            let dims = mu.len();
            FrequencyLattice::new(mu, vec![(0, 0); dims])
        } else {
            FrequencyLattice::hull(mu, coeffs.keys())
        };
        HarmonicState {
            n_qubits,
            lattice,
            coeffs,
            capacity,
        }
    }

    /// Drops entries below [`PRUNE_TOL`] and columns that became empty.
    pub(crate) fn prune(&mut self) {
        for column in self.coeffs.values_mut() {
            for entry in column.iter_mut() {
                if entry.norm() < PRUNE_TOL {
                    *entry = Complex64::new(0.0, 0.0);
                }
            }
        }
        self.coeffs.retain(|_, column| column.norm_squared() > 0.0);
    }
}

/// Wraps a statevector as a harmonic state with all amplitude at frequency
/// zero.
pub fn init_harmonic(
    state: &ComplexVector,
    lattice: FrequencyLattice,
) -> Result<HarmonicState, HarmonicError> {
    let dim = state.len();
    if !dim.is_power_of_two() {
        return Err(HarmonicError::DimensionMismatch {
            context: "initial state".into(),
            expected: dim.next_power_of_two(),
            got: dim,
        });
    }
    let deviation = (state.norm() - 1.0).abs();
    if deviation > NORM_TOL {
        return Err(HarmonicError::UnnormalizedState { deviation });
    }
    let origin: LatticePoint = vec![0; lattice.dims()];
    let mut coeffs = BTreeMap::new();
    coeffs.insert(origin, state.clone());
    Ok(HarmonicState::from_parts(
        dim.trailing_zeros() as usize,
        lattice.mu().to_vec(),
        coeffs,
        STATE_CAPACITY,
    ))
}

/// Applies a data-independent unitary: every coefficient column is
/// multiplied, leaving the frequency content untouched.
pub fn apply_unitary(
    hs: &HarmonicState,
    u: &ComplexMatrix,
) -> Result<HarmonicState, HarmonicError> {
    if u.nrows() != hs.dim() || u.ncols() != hs.dim() {
        return Err(HarmonicError::DimensionMismatch {
            context: "unitary".into(),
            expected: hs.dim(),
            got: u.nrows(),
        });
    }
    debug_assert!(qru_algebra::is_unitary(u, 1e-10));
    let coeffs: BTreeMap<LatticePoint, ComplexVector> = hs
        .coeffs
        .iter()
        .map(|(k, column)| (k.clone(), u * column))
        .collect();
    Ok(HarmonicState {
        n_qubits: hs.n_qubits,
        lattice: hs.lattice.clone(),
        coeffs,
        capacity: hs.capacity,
    })
}

/// Squared column norms per lattice point: `w_k = sum_j |c_{j,k}|^2`.
///
/// These are the exact harmonic weights of the state; they sum to one and
/// are invariant under [`apply_unitary`].
pub fn frequency_weights(hs: &HarmonicState) -> BTreeMap<LatticePoint, f64> {
    hs.coeffs
        .iter()
        .map(|(k, column)| (k.clone(), column.norm_squared()))
        .collect()
}
