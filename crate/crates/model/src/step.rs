//! Circuit steps: parameterized rotations, fixed unitaries, data encodings.

use qru_algebra::{ComplexMatrix, ComplexVector, HermitianGenerator};

/// What a circuit step does when applied to the state.
#[derive(Debug, Clone)]
pub enum GateKind {
    /// `exp(i * theta[param_index] * V)` for a Hermitian generator `V`.
    Parameterized {
        generator: HermitianGenerator,
        param_index: usize,
    },
    /// A constant unitary, independent of parameters and data.
    Fixed { unitary: ComplexMatrix },
    /// `exp(i * x * g)` for a Hermitian encoding generator `g`.
    Encoding { generator: HermitianGenerator },
}

/// One gate in the circuit, tagged with the layer it belongs to.
///
/// The layer index is bookkeeping for layer-resolved diagnostics; evaluation
/// only cares about the order of the step list.
#[derive(Debug, Clone)]
pub struct GateStep {
    pub kind: GateKind,
    pub layer_index: usize,
}

impl GateStep {
    pub fn parameterized(
        generator: HermitianGenerator,
        param_index: usize,
        layer_index: usize,
    ) -> Self {
        GateStep {
            kind: GateKind::Parameterized {
                generator,
                param_index,
            },
            layer_index,
        }
    }

    pub fn fixed(unitary: ComplexMatrix, layer_index: usize) -> Self {
        GateStep {
            kind: GateKind::Fixed { unitary },
            layer_index,
        }
    }

    pub fn encoding(generator: HermitianGenerator, layer_index: usize) -> Self {
        GateStep {
            kind: GateKind::Encoding { generator },
            layer_index,
        }
    }

    /// Hilbert-space dimension the step acts on.
    pub fn dim(&self) -> usize {
        match &self.kind {
            GateKind::Parameterized { generator, .. } => generator.dim(),
            GateKind::Fixed { unitary } => unitary.nrows(),
            GateKind::Encoding { generator } => generator.dim(),
        }
    }

    pub fn is_parameterized(&self) -> bool {
        matches!(self.kind, GateKind::Parameterized { .. })
    }

    pub fn is_encoding(&self) -> bool {
        matches!(self.kind, GateKind::Encoding { .. })
    }

    /// Applies the step's unitary to a state.
    ///
    /// `theta` must already have the model's arity; the model validates it
    /// before evaluation starts.
    pub fn apply(&self, state: &ComplexVector, theta: &[f64], x: f64) -> ComplexVector {
        match &self.kind {
            GateKind::Parameterized {
                generator,
                param_index,
            } => generator.apply_expm_i(theta[*param_index], state),
            GateKind::Fixed { unitary } => unitary * state,
            GateKind::Encoding { generator } => generator.apply_expm_i(x, state),
        }
    }

    /// Applies the inverse (adjoint) of the step's unitary to a state.
    pub fn apply_inverse(&self, state: &ComplexVector, theta: &[f64], x: f64) -> ComplexVector {
        match &self.kind {
            GateKind::Parameterized {
                generator,
                param_index,
            } => generator.apply_expm_i(-theta[*param_index], state),
            GateKind::Fixed { unitary } => unitary.adjoint() * state,
            GateKind::Encoding { generator } => generator.apply_expm_i(-x, state),
        }
    }

    /// Materializes the step's unitary matrix.
    ///
    /// Used where one gate is reapplied to many states (training sweeps,
    /// witness estimation); single applications go through [`Self::apply`].
    pub fn unitary(&self, theta: &[f64], x: f64) -> ComplexMatrix {
        match &self.kind {
            GateKind::Parameterized {
                generator,
                param_index,
            } => generator.expm_i(theta[*param_index]),
            GateKind::Fixed { unitary } => unitary.clone(),
            GateKind::Encoding { generator } => generator.expm_i(x),
        }
    }
}
