//! Error type for algebra operations.

use thiserror::Error;

/// Errors raised by matrix construction, decomposition, and sampling.
#[derive(Debug, Error)]
pub enum AlgebraError {
    /// A dimension argument was zero or otherwise unusable.
    #[error("invalid dimension {dim}: {reason}")]
    InvalidDimension { dim: usize, reason: String },

    /// A qubit index referenced a wire outside the register.
    #[error("qubit index {index} out of range for {n_qubits} qubits")]
    QubitOutOfRange { index: usize, n_qubits: usize },

    /// The requested system size exceeds the dense-representation cap.
    #[error("{n_qubits} qubits exceeds the supported maximum of {max} (dense matrices only)")]
    TooManyQubits { n_qubits: usize, max: usize },

    /// An operation requiring a square matrix received a rectangular one.
    #[error("expected a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    /// A matrix expected to be Hermitian failed the symmetry check.
    #[error("matrix '{label}' is not Hermitian: max |A - A^dagger| entry = {deviation:.3e}")]
    NotHermitian { label: String, deviation: f64 },

    /// Two operands have incompatible shapes.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}
