//! Error type shared by the scan, witness, and audit operations.

use qru_model::ModelError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GradientsError {
    /// Sampler covers a different number of parameters than the circuit.
    #[error("theta sampler covers {got} parameters, circuit has {expected}")]
    ArityMismatch { expected: usize, got: usize },

    /// Two-copy witness operators grow as 16^n and stop fitting in memory.
    #[error("witness estimation supports at most {max} qubits, got {n_qubits}")]
    TooManyQubits { n_qubits: usize, max: usize },

    /// No parameterized gate carries the requested index.
    #[error("no gate with parameter index {index} (circuit has {n_params} parameters)")]
    UnknownParameter { index: usize, n_params: usize },

    /// Right and left witnesses were estimated for different gates.
    #[error("witness gate indices disagree: right {right}, left {left}")]
    MismatchedIndices { right: usize, left: usize },

    /// A witness estimate was passed in the wrong role.
    #[error("expected a {expected} witness, got a {got} witness")]
    WrongWitnessSide {
        expected: &'static str,
        got: &'static str,
    },

    #[error(transparent)]
    Model(#[from] ModelError),
}
