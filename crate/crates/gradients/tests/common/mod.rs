//! Shared circuit builders for the integration suites.
#![allow(dead_code)]

use qru_algebra::{
    build_generator, identity, ComplexMatrix, GeneratorSpec, HermitianGenerator, Pauli,
};
use qru_model::{GateStep, QruModel};
use rand::Rng;

pub fn pauli(p: Pauli, site: usize, n: usize) -> HermitianGenerator {
    build_generator(&GeneratorSpec::PauliString(vec![(site, p)]), n).unwrap()
}

pub fn random_pauli_string<R: Rng + ?Sized>(n: usize, rng: &mut R) -> HermitianGenerator {
    let paulis = [Pauli::X, Pauli::Y, Pauli::Z];
    loop {
        let sites: Vec<(usize, Pauli)> = (0..n)
            .filter_map(|q| {
                if rng.random_range(0..4) < 3 {
                    Some((q, paulis[rng.random_range(0..3)]))
                } else {
                    None
                }
            })
            .collect();
        if !sites.is_empty() {
            return build_generator(&GeneratorSpec::PauliString(sites), n).unwrap();
        }
    }
}

/// Alternating random Pauli rotations and random Pauli encodings.
pub fn random_model<R: Rng + ?Sized>(n_qubits: usize, n_layers: usize, rng: &mut R) -> QruModel {
    let steps: Vec<GateStep> = (0..n_layers)
        .flat_map(|l| {
            vec![
                GateStep::parameterized(random_pauli_string(n_qubits, rng), l, l),
                GateStep::encoding(random_pauli_string(n_qubits, rng), l),
            ]
        })
        .collect();
    let observable = random_pauli_string(n_qubits, rng);
    QruModel::new(n_qubits, steps, observable, None).unwrap()
}

/// `diag(1, 1, 1, -1)` on two qubits.
pub fn cz_matrix() -> ComplexMatrix {
    let mut m = identity(4);
    m[(3, 3)] = (-1.0).into();
    m
}

/// `Z_0 + 0.5 Z_0 Z_1`, the two-qubit audit observable.
pub fn audit_observable() -> HermitianGenerator {
    let z1 = pauli(Pauli::Z, 0, 2);
    let zz = build_generator(
        &GeneratorSpec::PauliString(vec![(0, Pauli::Z), (1, Pauli::Z)]),
        2,
    )
    .unwrap();
    let matrix = z1.matrix() + zz.matrix() * num_complex::Complex64::from(0.5);
    HermitianGenerator::new(matrix, "Z1 + 0.5 Z1Z2").unwrap()
}
