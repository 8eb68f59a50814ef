//! Random circuits with integer-spectrum encodings for equivalence tests.

use qru_algebra::{
    build_generator, haar_unitary_from_rng, GeneratorSpec, HermitianGenerator, Pauli,
};
use qru_model::{GateStep, QruModel};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn random_pauli(rng: &mut ChaCha8Rng) -> Pauli {
    match rng.random_range(0..3) {
        0 => Pauli::X,
        1 => Pauli::Y,
        _ => Pauli::Z,
    }
}

fn random_pauli_string(rng: &mut ChaCha8Rng, n_qubits: usize) -> HermitianGenerator {
    let site = rng.random_range(0..n_qubits);
    build_generator(
        &GeneratorSpec::PauliString(vec![(site, random_pauli(rng))]),
        n_qubits,
    )
    .unwrap()
}

/// Encodings drawn from a pool of integer-spectrum generators; their joint
/// base frequency is 1 or 2, so every mix shares a lattice.
fn random_encoding(rng: &mut ChaCha8Rng, n_qubits: usize) -> HermitianGenerator {
    match rng.random_range(0..3) {
        0 => random_pauli_string(rng, n_qubits),
        1 => build_generator(&GeneratorSpec::Collective(random_pauli(rng)), n_qubits).unwrap(),
        _ => {
            if n_qubits >= 2 {
                build_generator(&GeneratorSpec::CyclicZz, n_qubits).unwrap()
            } else {
                random_pauli_string(rng, n_qubits)
            }
        }
    }
}

/// A random model with `n_layers` encoding gates interleaved with
/// parameterized Pauli rotations and occasional Haar-random fixed gates.
pub fn random_model(rng: &mut ChaCha8Rng, n_qubits: usize, n_layers: usize) -> QruModel {
    let dim = 1usize << n_qubits;
    let mut steps = Vec::new();
    let mut param = 0;
    for layer in 0..n_layers {
        steps.push(GateStep::parameterized(
            random_pauli_string(rng, n_qubits),
            param,
            layer,
        ));
        param += 1;
        if rng.random_range(0..3) == 0 {
            steps.push(GateStep::fixed(
                haar_unitary_from_rng(dim, rng).unwrap(),
                layer,
            ));
        }
        steps.push(GateStep::encoding(random_encoding(rng, n_qubits), layer));
    }
    steps.push(GateStep::parameterized(
        random_pauli_string(rng, n_qubits),
        param,
        n_layers,
    ));
    let observable = build_generator(&GeneratorSpec::Collective(Pauli::Z), n_qubits).unwrap();
    QruModel::new(n_qubits, steps, observable, None).unwrap()
}

pub fn random_theta(rng: &mut ChaCha8Rng, count: usize) -> Vec<f64> {
    (0..count)
        .map(|_| rng.random::<f64>() * std::f64::consts::TAU)
        .collect()
}
