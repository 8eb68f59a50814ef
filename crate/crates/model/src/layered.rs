//! Layered decomposition of a circuit around its encoding gates.

use crate::error::ModelError;
use crate::model::QruModel;
use crate::step::{GateKind, GateStep};
use qru_algebra::HermitianGenerator;

/// One layer: the processing block applied before an encoding gate, plus
/// that encoding's generator.
#[derive(Debug, Clone)]
pub struct Layer {
    /// Parameterized and fixed steps preceding the encoding, in order.
    pub block: Vec<GateStep>,
    /// Generator of the encoding gate closing the layer.
    pub encoding: HermitianGenerator,
}

/// A circuit reorganized as encoding-terminated layers.
///
/// Steps after the last encoding gate act on the measurement side only; they
/// are kept in `dressing` so concatenating all layers and the dressing
/// reproduces the original step list exactly.
#[derive(Debug, Clone)]
pub struct LayeredView {
    pub layers: Vec<Layer>,
    pub dressing: Vec<GateStep>,
}

impl LayeredView {
    /// Number of encoding layers.
    pub fn count(&self) -> usize {
        self.layers.len()
    }
}

/// Splits the step list at each encoding gate.
///
/// Fails only when the circuit contains no encoding step at all; a circuit
/// that never touches the data has no layered structure to expose.
pub fn layered_view(model: &QruModel) -> Result<LayeredView, ModelError> {
    if !model.steps().iter().any(GateStep::is_encoding) {
        return Err(ModelError::NotLayered);
    }
    let mut layers = Vec::new();
    let mut block = Vec::new();
    for step in model.steps() {
        if let GateKind::Encoding { generator } = &step.kind {
            layers.push(Layer {
                block: std::mem::take(&mut block),
                encoding: generator.clone(),
            });
        } else {
            block.push(step.clone());
        }
    }
    Ok(LayeredView {
        layers,
        dressing: block,
    })
}
