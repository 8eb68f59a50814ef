//! Error type for spectrum-kernel operations.

use thiserror::Error;

/// Errors raised by kernel extraction, convolution, and serialization.
#[derive(Debug, Error)]
pub enum SpectrumError {
    /// Eigenvalues do not fit a single-base integer lattice.
    #[error(
        "spectrum of '{label}' is not harmonic (no base frequency with denominator <= {max_denominator} \
         fits all eigenvalues); pass an explicit mu_hint basis for anharmonic generators"
    )]
    AnharmonicSpectrum { label: String, max_denominator: u64 },

    /// An eigenvalue has no integer coordinate vector on the hinted basis.
    #[error(
        "eigenvalue {value} of '{label}' has no integer lattice point on the supplied mu basis {mu:?} \
         within tolerance"
    )]
    NoLatticeFit {
        label: String,
        value: f64,
        mu: Vec<f64>,
    },

    /// Two kernels live on different lattices.
    #[error("lattice mismatch: mu {left:?} (D={left_dims}) vs mu {right:?} (D={right_dims})")]
    LatticeMismatch {
        left: Vec<f64>,
        left_dims: usize,
        right: Vec<f64>,
        right_dims: usize,
    },

    /// Kernel weights failed validation.
    #[error("invalid kernel weights: {reason}")]
    InvalidWeights { reason: String },

    /// Convolution power must be at least one.
    #[error("convolution power must be >= 1, got {power}")]
    InvalidPower { power: usize },

    /// A convolution would populate more lattice points than the cap allows.
    #[error("kernel would hold {points} lattice points, exceeding the capacity cap of {cap}")]
    CapacityExceeded { points: usize, cap: usize },

    /// JSON (de)serialization failure.
    #[error("kernel JSON error: {0}")]
    Json(#[from] serde_json::Error),
}
