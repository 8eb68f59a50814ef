//! Data-encoding application: eigencomponents shift along the lattice.

use crate::error::HarmonicError;
use crate::state::HarmonicState;
use qru_algebra::{ComplexMatrix, HermitianGenerator};
use qru_spectrum::{mu_compatible, KernelMap, LatticePoint};
use std::collections::BTreeMap;

/// Applies the encoding gate `exp(i x g)` in frequency space.
///
/// In g's eigenbasis the gate multiplies the eigenvalue-`lambda` component
/// by `exp(i lambda x)`; since `lambda = mu . k(lambda)`, that is exactly a
/// shift of the component from lattice point `k` to `k + k(lambda)`. The
/// kernel map supplies the offset of every degenerate eigenvalue level.
///
/// Lattice bounds grow as needed; exceeding the state's capacity is an
/// error.
pub fn apply_encoding(
    hs: &HarmonicState,
    g: &HermitianGenerator,
    map: &KernelMap,
) -> Result<HarmonicState, HarmonicError> {
    if g.dim() != hs.dim() {
        return Err(HarmonicError::DimensionMismatch {
            context: format!("encoding generator {}", g.label()),
            expected: hs.dim(),
            got: g.dim(),
        });
    }
    if !mu_compatible(hs.lattice().mu(), &map.mu) {
        return Err(HarmonicError::IncompatibleLattice {
            state_mu: hs.lattice().mu().to_vec(),
            map_mu: map.mu.clone(),
        });
    }

    // One dim x multiplicity eigenvector block per level; the projector onto
    // the level is B B^dag.
    let blocks: Vec<(&LatticePoint, ComplexMatrix)> = map
        .groups
        .iter()
        .zip(&map.offsets)
        .map(|(group, offset)| {
            let block = g.eigenvectors().select_columns(&group.indices);
            (offset, block)
        })
        .collect();

    let mut coeffs: BTreeMap<LatticePoint, qru_algebra::ComplexVector> = BTreeMap::new();
    for (point, column) in hs.coeffs() {
        for (offset, block) in &blocks {
            let component = block * (block.adjoint() * column);
            let target: LatticePoint = point
                .iter()
                .zip(offset.iter())
                .map(|(&k, &o)| k + o)
                .collect();
            match coeffs.get_mut(&target) {
                Some(existing) => *existing += component,
                None => {
                    coeffs.insert(target, component);
                }
            }
        }
    }

    let mut next = HarmonicState::from_parts(
        hs.n_qubits(),
        hs.lattice().mu().to_vec(),
        coeffs,
        hs.capacity(),
    );
    next.prune();
    if next.support_size() > next.capacity() {
        return Err(HarmonicError::CapacityExceeded {
            points: next.support_size(),
            cap: next.capacity(),
        });
    }
    debug_assert!(
        (next.total_norm() - 1.0).abs() <= 1e-10,
        "encoding drifted the norm to {}",
        next.total_norm()
    );
    Ok(next)
}
