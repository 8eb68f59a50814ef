//! Error type for harmonic simulation.

use thiserror::Error;

/// Errors raised by frequency-resolved simulation.
#[derive(Debug, Error)]
pub enum HarmonicError {
    /// The initial state must be normalized.
    #[error("state norm deviates from 1 by {deviation:.3e}")]
    UnnormalizedState { deviation: f64 },

    /// An operator does not match the state's Hilbert-space dimension.
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        got: usize,
    },

    /// A parameter vector of the wrong length was supplied.
    #[error("expected {expected} parameters, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// An encoding's lattice offsets live on a different frequency basis
    /// than the state.
    #[error("encoding lattice base {map_mu:?} is incompatible with state base {state_mu:?}")]
    IncompatibleLattice {
        state_mu: Vec<f64>,
        map_mu: Vec<f64>,
    },

    /// The populated lattice grew past the configured cap.
    #[error("populated lattice points {points} exceed capacity {cap}")]
    CapacityExceeded { points: usize, cap: usize },

    /// A hand-assembled profile violates its structural invariants.
    #[error("invalid profile: {reason}")]
    InvalidProfile { reason: String },

    /// Base-frequency detection or offset solving failed.
    #[error(transparent)]
    Spectrum(#[from] qru_spectrum::SpectrumError),

    /// Profile serialization failed.
    #[error("profile serialization failed: {0}")]
    Json(#[from] serde_json::Error),
}
