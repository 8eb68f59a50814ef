//! Exact parameter gradients via one adjoint sweep.

use crate::error::ModelError;
use crate::model::QruModel;
use crate::step::GateKind;

/// Gradient of the hypothesis with respect to every circuit parameter.
///
/// With `psi_t` the state after the first `t` steps and
/// `lambda_t = G_{t+1}^dag ... G_T^dag H psi_T`, the derivative for the
/// parameterized step at position `t` with generator `V` is
///
/// `d h / d theta_j = 2 Re <lambda_t| i V |psi_t> = -2 Im <lambda_t| V |psi_t>`
///
/// because `d/d theta exp(i V theta) = i V exp(i V theta)`. One forward pass
/// stores the `psi_t`; one backward pass pulls `lambda` through the adjoint
/// gates and reads off every component. The result is exact up to floating
/// point, not a finite-difference estimate.
pub fn gradient(model: &QruModel, theta: &[f64], x: f64) -> Result<Vec<f64>, ModelError> {
    let states = model.states_through(theta, x)?;
    let final_state = states.last().unwrap();
    let mut lambda = model.observable().matrix() * final_state;
    let mut grad = vec![0.0; model.n_params()];
    for (t, step) in model.steps().iter().enumerate().rev() {
        if let GateKind::Parameterized {
            generator,
            param_index,
        } = &step.kind
        {
            let v_psi = generator.matrix() * &states[t + 1];
            grad[*param_index] = -2.0 * lambda.dotc(&v_psi).im;
        }
        lambda = step.apply_inverse(&lambda, theta, x);
    }
    Ok(grad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::hypothesis;
    use crate::step::GateStep;
    use approx::assert_abs_diff_eq;
    use qru_algebra::{build_generator, GeneratorSpec, HermitianGenerator, Pauli};
    use std::f64::consts::FRAC_PI_8;

    fn pauli(p: Pauli) -> HermitianGenerator {
        build_generator(&GeneratorSpec::Collective(p), 1).unwrap()
    }

    fn cos_two_theta_model() -> QruModel {
        let steps = vec![GateStep::parameterized(pauli(Pauli::X), 0, 0)];
        QruModel::new(1, steps, pauli(Pauli::Z), None).unwrap()
    }

    #[test]
    fn derivative_of_cos_two_theta() {
        let model = cos_two_theta_model();
        // h = cos(2 theta), dh = -2 sin(2 theta); at pi/8 this is -sqrt(2).
        let grad = gradient(&model, &[FRAC_PI_8], 0.0).unwrap();
        assert_abs_diff_eq!(grad[0], -std::f64::consts::SQRT_2, epsilon = 1e-12);
        let grad_zero = gradient(&model, &[0.0], 0.0).unwrap();
        assert_abs_diff_eq!(grad_zero[0], 0.0, epsilon = 1e-14);
    }

    #[test]
    fn matches_analytic_derivative_along_grid() {
        let model = cos_two_theta_model();
        for theta in [-1.2, 0.25, 0.9, 2.7] {
            let grad = gradient(&model, &[theta], 0.0).unwrap();
            assert_abs_diff_eq!(grad[0], -2.0 * (2.0 * theta).sin(), epsilon = 1e-12);
        }
    }

    #[test]
    fn two_parameter_circuit_matches_central_differences() {
        let steps = vec![
            GateStep::parameterized(pauli(Pauli::X), 0, 0),
            GateStep::encoding(pauli(Pauli::Z), 0),
            GateStep::parameterized(pauli(Pauli::Y), 1, 1),
        ];
        let model = QruModel::new(1, steps, pauli(Pauli::Z), None).unwrap();
        let theta = [0.61, -1.34];
        let x = 0.83;
        let grad = gradient(&model, &theta, x).unwrap();
        let step = 1e-5;
        for j in 0..2 {
            let mut plus = theta;
            let mut minus = theta;
            plus[j] += step;
            minus[j] -= step;
            let fd = (hypothesis(&model, &plus, x).unwrap()
                - hypothesis(&model, &minus, x).unwrap())
                / (2.0 * step);
            assert_abs_diff_eq!(grad[j], fd, epsilon = 1e-6);
        }
    }

    #[test]
    fn arity_is_checked() {
        let model = cos_two_theta_model();
        assert!(gradient(&model, &[0.1, 0.2], 0.0).is_err());
    }
}
