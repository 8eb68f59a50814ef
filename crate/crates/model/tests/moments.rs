//! Monte-Carlo checks of gradient moments against closed forms.
//!
//! For the single-qubit rotation measured in Z the hypothesis is
//! `cos(2 theta)`, so over `theta ~ U[0, 2pi)` the gradient has mean 0 and
//! variance `E[4 sin^2(2 theta)] = 2` exactly.

mod common;

use qru_model::{gradient, GateStep, QruModel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

const N_SAMPLES: usize = 10_000;

fn uniform_angles(rng: &mut ChaCha8Rng, count: usize) -> Vec<f64> {
    (0..count).map(|_| rng.random::<f64>() * TAU).collect()
}

#[test]
fn single_rotation_gradient_variance_is_two() {
    let x_gen = qru_algebra::build_generator(
        &qru_algebra::GeneratorSpec::Collective(qru_algebra::Pauli::X),
        1,
    )
    .unwrap();
    let z_gen = qru_algebra::build_generator(
        &qru_algebra::GeneratorSpec::Collective(qru_algebra::Pauli::Z),
        1,
    )
    .unwrap();
    let model = QruModel::new(
        1,
        vec![GateStep::parameterized(x_gen, 0, 0)],
        z_gen,
        None,
    )
    .unwrap();

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut sum = 0.0;
    let mut sum_sq = 0.0;
    let mut sum_fourth = 0.0;
    for theta in uniform_angles(&mut rng, N_SAMPLES) {
        let g = gradient(&model, &[theta], 0.0).unwrap()[0];
        sum += g;
        sum_sq += g * g;
        sum_fourth += g.powi(4);
    }
    let n = N_SAMPLES as f64;
    let mean = sum / n;
    let var = sum_sq / n - mean * mean;
    // The variance estimator's own spread: Var(g^2) = E[g^4] - (E[g^2])^2.
    let var_of_sq = sum_fourth / n - (sum_sq / n).powi(2);
    let se = (var_of_sq / n).sqrt();
    assert!(
        (var - 2.0).abs() <= 3.0 * se,
        "variance {var} deviates from 2 by more than 3 standard errors ({se})"
    );
}

#[test]
fn random_circuit_gradients_have_zero_mean() {
    // d h / d theta_j integrates to zero over a full period of theta_j, so
    // each component has exact mean zero under uniform angles.
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let n_params = 4;
    let model = common::random_model(&mut rng, 2, n_params);
    let n_samples = 4_000;
    let mut sums = vec![0.0; n_params];
    let mut sums_sq = vec![0.0; n_params];
    for _ in 0..n_samples {
        let theta = uniform_angles(&mut rng, n_params);
        let grad = gradient(&model, &theta, 0.9).unwrap();
        for j in 0..n_params {
            sums[j] += grad[j];
            sums_sq[j] += grad[j] * grad[j];
        }
    }
    let n = n_samples as f64;
    for j in 0..n_params {
        let mean = sums[j] / n;
        let var = sums_sq[j] / n - mean * mean;
        let se = (var / n).sqrt().max(1e-12);
        assert!(
            mean.abs() <= 4.0 * se,
            "component {j}: mean {mean} exceeds 4 standard errors ({se})"
        );
    }
}
