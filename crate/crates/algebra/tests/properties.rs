//! Property tests for the algebra layer.

use proptest::prelude::*;
use qru_algebra::{
    build_generator, haar_unitary, is_unitary, max_abs_diff, schatten_norm, GeneratorSpec, Pauli,
    SchattenOrder,
};

fn arb_pauli() -> impl Strategy<Value = Pauli> {
    prop_oneof![Just(Pauli::X), Just(Pauli::Y), Just(Pauli::Z)]
}

fn arb_spec(n_qubits: usize) -> impl Strategy<Value = GeneratorSpec> {
    prop_oneof![
        arb_pauli().prop_map(GeneratorSpec::Collective),
        Just(GeneratorSpec::CyclicZz),
        Just(GeneratorSpec::AllPairsZz),
        proptest::collection::vec((0..n_qubits, arb_pauli()), 1..=n_qubits)
            .prop_map(GeneratorSpec::PauliString),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn haar_output_is_unitary(dim in 1usize..=16, seed in any::<u64>()) {
        let u = haar_unitary(dim, seed).unwrap();
        prop_assert!(is_unitary(&u, 1e-12));
    }

    #[test]
    fn expm_i_one_parameter_group_law(
        n in 1usize..=3,
        spec_seed in 0usize..4,
        a in -3.0f64..3.0,
        b in -3.0f64..3.0,
    ) {
        let spec = match spec_seed {
            0 => GeneratorSpec::Collective(Pauli::X),
            1 => GeneratorSpec::Collective(Pauli::Y),
            2 => GeneratorSpec::Collective(Pauli::Z),
            _ => GeneratorSpec::CyclicZz,
        };
        let g = build_generator(&spec, n).unwrap();
        let lhs = g.expm_i(a) * g.expm_i(b);
        let rhs = g.expm_i(a + b);
        prop_assert!(max_abs_diff(&lhs, &rhs) <= 1e-10);
    }

    #[test]
    fn spectral_norm_equals_max_abs_eigenvalue(n in 1usize..=4, spec in arb_spec(4)) {
        let spec_ok = match &spec {
            GeneratorSpec::PauliString(factors) => factors.iter().all(|&(q, _)| q < n),
            _ => true,
        };
        prop_assume!(spec_ok);
        let g = build_generator(&spec, n).unwrap();
        let svd_norm = schatten_norm(g.matrix(), SchattenOrder::Spectral).unwrap();
        prop_assert!((svd_norm - g.spectral_norm()).abs() <= 1e-10);
    }

    #[test]
    fn trace_norm_dominates_spectral_norm(dim in 1usize..=8, seed in any::<u64>()) {
        let u = haar_unitary(dim, seed).unwrap();
        let trace = schatten_norm(&u, SchattenOrder::Trace).unwrap();
        let spectral = schatten_norm(&u, SchattenOrder::Spectral).unwrap();
        prop_assert!(trace + 1e-12 >= spectral);
    }
}
