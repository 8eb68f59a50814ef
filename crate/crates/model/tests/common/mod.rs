//! Random circuit construction shared by the integration tests.

use qru_algebra::{
    build_generator, haar_unitary_from_rng, GeneratorSpec, HermitianGenerator, Pauli,
};
use qru_model::{GateStep, QruModel};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_pauli(rng: &mut ChaCha8Rng) -> Pauli {
    match rng.random_range(0..3) {
        0 => Pauli::X,
        1 => Pauli::Y,
        _ => Pauli::Z,
    }
}

/// A Pauli string on one or two distinct sites of an `n`-qubit register.
pub fn random_pauli_string(rng: &mut ChaCha8Rng, n_qubits: usize) -> HermitianGenerator {
    let first = rng.random_range(0..n_qubits);
    let mut sites = vec![(first, random_pauli(rng))];
    if n_qubits > 1 && rng.random_range(0..2) == 1 {
        let mut second = rng.random_range(0..n_qubits);
        while second == first {
            second = rng.random_range(0..n_qubits);
        }
        sites.push((second, random_pauli(rng)));
    }
    build_generator(&GeneratorSpec::PauliString(sites), n_qubits).unwrap()
}

/// A random circuit: Pauli-string rotations, occasional Haar-random fixed
/// gates, and single-site encodings, measured in a random Pauli string.
pub fn random_model(rng: &mut ChaCha8Rng, n_qubits: usize, n_params: usize) -> QruModel {
    let dim = 1usize << n_qubits;
    let mut steps = Vec::new();
    for j in 0..n_params {
        steps.push(GateStep::parameterized(
            random_pauli_string(rng, n_qubits),
            j,
            j,
        ));
        if rng.random_range(0..3) == 0 {
            steps.push(GateStep::fixed(haar_unitary_from_rng(dim, rng).unwrap(), j));
        }
        if rng.random_range(0..2) == 0 {
            let site = rng.random_range(0..n_qubits);
            let enc = build_generator(
                &GeneratorSpec::PauliString(vec![(site, Pauli::Z)]),
                n_qubits,
            )
            .unwrap();
            steps.push(GateStep::encoding(enc, j));
        }
    }
    let observable = random_pauli_string(rng, n_qubits);
    QruModel::new(n_qubits, steps, observable, None).unwrap()
}
