//! Statevector simulation of data re-uploading circuits.
//!
//! A model is an ordered gate sequence acting on `n` qubits: parameterized
//! rotations `exp(i * theta_j * V_j)`, fixed unitaries, and data encodings
//! `exp(i * x * g)`. The crate evaluates hypothesis values
//! `<psi(theta, x)| H |psi(theta, x)>`, their exact parameter gradients via a
//! single adjoint sweep, and structural views of the circuit (encoding-free
//! base circuit, layered decomposition).

mod error;
mod gradient;
mod layered;
mod model;
mod step;

pub use error::ModelError;
pub use gradient::gradient;
pub use layered::{layered_view, Layer, LayeredView};
pub use model::{base_pqc, evaluate_state, hypothesis, zero_state, QruModel};
pub use step::{GateKind, GateStep};
