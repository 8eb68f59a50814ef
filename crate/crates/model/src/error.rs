//! Error type for model construction and evaluation.

use thiserror::Error;

/// Errors raised while building or evaluating a circuit model.
#[derive(Debug, Error)]
pub enum ModelError {
    /// A gate or observable does not act on the model's Hilbert space.
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: String,
        expected: usize,
        got: usize,
    },

    /// Parameter indices of the parameterized steps must form 0..n_params
    /// with no repeats, so a parameter vector maps onto gates unambiguously.
    #[error("parameter indices must cover 0..{expected} exactly once; {problem}")]
    BadParameterIndices { expected: usize, problem: String },

    /// A parameter vector of the wrong length was supplied.
    #[error("expected {expected} parameters, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// The supplied initial state is not normalized.
    #[error("initial state norm deviates from 1 by {deviation:.3e}")]
    UnnormalizedState { deviation: f64 },

    /// A fixed gate is not unitary.
    #[error("fixed gate at step {step} deviates from unitarity by {deviation:.3e}")]
    NonUnitaryGate { step: usize, deviation: f64 },

    /// The circuit has no encoding step, so no layered decomposition exists.
    #[error("circuit contains no encoding step; a layered view needs at least one")]
    NotLayered,
}
