//! Whole-circuit harmonic simulation.

use crate::encoding::apply_encoding;
use crate::error::HarmonicError;
use crate::state::{apply_unitary, init_harmonic, HarmonicState};
use qru_model::{GateKind, QruModel};
use qru_spectrum::{detect_mu, kernel_map, FrequencyLattice};

/// Runs the circuit in frequency space with an automatically detected base
/// frequency.
///
/// The base is detected jointly over the union of all encoding eigenvalues,
/// so circuits mixing different encoding generators land on one shared
/// lattice. Anharmonic spectra fail detection; supply the basis through
/// [`simulate_harmonic_with_basis`] instead.
pub fn simulate_harmonic(model: &QruModel, theta: &[f64]) -> Result<HarmonicState, HarmonicError> {
    simulate_harmonic_with_basis(model, theta, None)
}

/// Runs the circuit in frequency space on the given base-frequency basis
/// (detected from the encodings when `None`).
pub fn simulate_harmonic_with_basis(
    model: &QruModel,
    theta: &[f64],
    mu_hint: Option<&[f64]>,
) -> Result<HarmonicState, HarmonicError> {
    if theta.len() != model.n_params() {
        return Err(HarmonicError::ArityMismatch {
            expected: model.n_params(),
            got: theta.len(),
        });
    }
    let encodings: Vec<_> = model
        .steps()
        .iter()
        .filter_map(|step| match &step.kind {
            GateKind::Encoding { generator } => Some(generator),
            _ => None,
        })
        .collect();
    let mu: Vec<f64> = match mu_hint {
        Some(basis) => basis.to_vec(),
        None if encodings.is_empty() => vec![1.0],
        None => {
            let union: Vec<f64> = encodings
                .iter()
                .flat_map(|g| g.eigen_groups().into_iter().map(|group| group.value))
                .collect();
            vec![detect_mu(&union, "joint encoding spectrum")?]
        }
    };

    let dims = mu.len();
    let lattice = FrequencyLattice::new(mu.clone(), vec![(0, 0); dims]);
    let mut hs = init_harmonic(model.initial_state(), lattice)?;
    for step in model.steps() {
        hs = match &step.kind {
            GateKind::Encoding { generator } => {
                let map = kernel_map(generator, Some(&mu))?;
                apply_encoding(&hs, generator, &map)?
            }
            // Non-encoding steps never read x; any value materializes the
            // same unitary.
            _ => apply_unitary(&hs, &step.unitary(theta, 0.0))?,
        };
    }
    Ok(hs)
}
