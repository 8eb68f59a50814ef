//! The circuit model and its evaluation entry points.

use crate::error::ModelError;
use crate::step::{GateKind, GateStep};
use num_complex::Complex64;
use qru_algebra::{is_unitary, ComplexVector, HermitianGenerator};

/// Tolerance on the norm of a user-supplied initial state.
const STATE_NORM_TOL: f64 = 1e-12;

/// Tolerance for the unitarity check on fixed gates.
const UNITARITY_TOL: f64 = 1e-10;

/// Expectation values of Hermitian observables are real up to rounding;
/// anything above this imaginary magnitude indicates a bug.
const HYPOTHESIS_IMAG_TOL: f64 = 1e-10;

/// A data re-uploading circuit: ordered gates, observable, initial state.
///
/// The hypothesis function it computes is
/// `h(theta, x) = <psi_0| U(theta, x)^dag H U(theta, x) |psi_0>`
/// where `U` is the product of the steps in list order.
#[derive(Debug, Clone)]
pub struct QruModel {
    n_qubits: usize,
    steps: Vec<GateStep>,
    observable: HermitianGenerator,
    initial_state: ComplexVector,
    n_params: usize,
}

impl QruModel {
    /// Builds a model, validating dimensions, fixed-gate unitarity,
    /// parameter-index coverage, and initial-state normalization.
    ///
    /// `initial_state: None` selects the all-zeros computational basis state.
    pub fn new(
        n_qubits: usize,
        steps: Vec<GateStep>,
        observable: HermitianGenerator,
        initial_state: Option<ComplexVector>,
    ) -> Result<Self, ModelError> {
        let dim = 1usize << n_qubits;
        if observable.dim() != dim {
            return Err(ModelError::DimensionMismatch {
                context: "observable".into(),
                expected: dim,
                got: observable.dim(),
            });
        }
        let mut param_indices = Vec::new();
        for (i, step) in steps.iter().enumerate() {
            if step.dim() != dim {
                return Err(ModelError::DimensionMismatch {
                    context: format!("step {i}"),
                    expected: dim,
                    got: step.dim(),
                });
            }
            match &step.kind {
                GateKind::Parameterized { param_index, .. } => param_indices.push(*param_index),
                GateKind::Fixed { unitary } => {
                    if !is_unitary(unitary, UNITARITY_TOL) {
                        return Err(ModelError::NonUnitaryGate {
                            step: i,
                            deviation: unitarity_deviation(unitary),
                        });
                    }
                }
                GateKind::Encoding { .. } => {}
            }
        }
        let n_params = param_indices.len();
        let mut seen = vec![false; n_params];
        for idx in &param_indices {
            if *idx >= n_params {
                return Err(ModelError::BadParameterIndices {
                    expected: n_params,
                    problem: format!("index {idx} out of range"),
                });
            }
            if seen[*idx] {
                return Err(ModelError::BadParameterIndices {
                    expected: n_params,
                    problem: format!("index {idx} repeated"),
                });
            }
            seen[*idx] = true;
        }
        let initial_state = match initial_state {
            Some(state) => {
                if state.len() != dim {
                    return Err(ModelError::DimensionMismatch {
                        context: "initial state".into(),
                        expected: dim,
                        got: state.len(),
                    });
                }
                let deviation = (state.norm() - 1.0).abs();
                if deviation > STATE_NORM_TOL {
                    return Err(ModelError::UnnormalizedState { deviation });
                }
                state
            }
            None => zero_state(n_qubits),
        };
        Ok(QruModel {
            n_qubits,
            steps,
            observable,
            initial_state,
            n_params,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn steps(&self) -> &[GateStep] {
        &self.steps
    }

    pub fn observable(&self) -> &HermitianGenerator {
        &self.observable
    }

    pub fn initial_state(&self) -> &ComplexVector {
        &self.initial_state
    }

    /// Number of circuit parameters (parameterized steps).
    pub fn n_params(&self) -> usize {
        self.n_params
    }

    pub(crate) fn check_arity(&self, theta: &[f64]) -> Result<(), ModelError> {
        if theta.len() != self.n_params {
            return Err(ModelError::ArityMismatch {
                expected: self.n_params,
                got: theta.len(),
            });
        }
        Ok(())
    }

    /// Forward pass that keeps every intermediate state.
    ///
    /// Entry `t` is the state after the first `t` steps, so the vector has
    /// `steps.len() + 1` entries. The gradient's adjoint sweep consumes this.
    pub(crate) fn states_through(
        &self,
        theta: &[f64],
        x: f64,
    ) -> Result<Vec<ComplexVector>, ModelError> {
        self.check_arity(theta)?;
        let mut states = Vec::with_capacity(self.steps.len() + 1);
        states.push(self.initial_state.clone());
        for step in &self.steps {
            let next = step.apply(states.last().unwrap(), theta, x);
            states.push(next);
        }
        Ok(states)
    }
}

/// The all-zeros computational basis state on `n` qubits.
pub fn zero_state(n_qubits: usize) -> ComplexVector {
    let dim = 1usize << n_qubits;
    let mut state = ComplexVector::zeros(dim);
    state[0] = Complex64::new(1.0, 0.0);
    state
}

fn unitarity_deviation(u: &qru_algebra::ComplexMatrix) -> f64 {
    let product = u.adjoint() * u;
    let id = qru_algebra::identity(u.nrows());
    qru_algebra::max_abs_diff(&product, &id)
}

/// Evaluates `U(theta, x) |psi_0>` by applying the steps in order.
pub fn evaluate_state(
    model: &QruModel,
    theta: &[f64],
    x: f64,
) -> Result<ComplexVector, ModelError> {
    model.check_arity(theta)?;
    let mut state = model.initial_state.clone();
    for step in &model.steps {
        state = step.apply(&state, theta, x);
    }
    Ok(state)
}

/// The hypothesis value `<psi(theta, x)| H |psi(theta, x)>`.
pub fn hypothesis(model: &QruModel, theta: &[f64], x: f64) -> Result<f64, ModelError> {
    let state = evaluate_state(model, theta, x)?;
    let value = state.dotc(&(model.observable.matrix() * &state));
    debug_assert!(
        value.im.abs() <= HYPOTHESIS_IMAG_TOL * model.observable.spectral_norm().max(1.0),
        "expectation value has imaginary part {:.3e}",
        value.im
    );
    Ok(value.re)
}

/// The encoding-free base circuit: encoding steps removed, everything else
/// kept in order.
///
/// Satisfies `hypothesis(base, theta, x) == hypothesis(model, theta, 0)` for
/// every `x`, since each encoding gate is the identity at `x = 0`.
pub fn base_pqc(model: &QruModel) -> QruModel {
    let steps: Vec<GateStep> = model
        .steps
        .iter()
        .filter(|s| !s.is_encoding())
        .cloned()
        .collect();
    QruModel {
        n_qubits: model.n_qubits,
        steps,
        observable: model.observable.clone(),
        initial_state: model.initial_state.clone(),
        n_params: model.n_params,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use qru_algebra::{build_generator, GeneratorSpec, Pauli};
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

    fn pauli(p: Pauli) -> HermitianGenerator {
        build_generator(&GeneratorSpec::Collective(p), 1).unwrap()
    }

    /// `exp(i X theta)` measured in `Z` gives `cos(2 theta)`.
    fn cos_two_theta_model() -> QruModel {
        let steps = vec![GateStep::parameterized(pauli(Pauli::X), 0, 0)];
        QruModel::new(1, steps, pauli(Pauli::Z), None).unwrap()
    }

    #[test]
    fn empty_circuit_returns_initial_state() {
        let model = QruModel::new(1, vec![], pauli(Pauli::Z), None).unwrap();
        let state = evaluate_state(&model, &[], 0.7).unwrap();
        assert_abs_diff_eq!(state[0].re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(state[1].norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn single_x_rotation_state() {
        let model = cos_two_theta_model();
        let state = evaluate_state(&model, &[FRAC_PI_4], 0.0).unwrap();
        // exp(i X pi/4)|0> = cos(pi/4)|0> + i sin(pi/4)|1>
        assert_abs_diff_eq!(state[0].re, FRAC_PI_4.cos(), epsilon = 1e-12);
        assert_abs_diff_eq!(state[1].im, FRAC_PI_4.sin(), epsilon = 1e-12);
    }

    #[test]
    fn hypothesis_is_cos_two_theta() {
        let model = cos_two_theta_model();
        for theta in [0.0, FRAC_PI_8, 0.4, 1.3] {
            let h = hypothesis(&model, &[theta], 0.0).unwrap();
            assert_abs_diff_eq!(h, (2.0 * theta).cos(), epsilon = 1e-12);
        }
        let h = hypothesis(&model, &[FRAC_PI_8], 0.0).unwrap();
        assert_abs_diff_eq!(h, std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-12);
    }

    /// `exp(i Z x) exp(i X pi/4)` measured in `X` gives `sin(2x)`.
    #[test]
    fn encoding_makes_sin_two_x() {
        let steps = vec![
            GateStep::parameterized(pauli(Pauli::X), 0, 0),
            GateStep::encoding(pauli(Pauli::Z), 0),
        ];
        let model = QruModel::new(1, steps, pauli(Pauli::X), None).unwrap();
        for x in [0.0, 0.3, FRAC_PI_4, 2.1] {
            let h = hypothesis(&model, &[FRAC_PI_4], x).unwrap();
            assert_abs_diff_eq!(h, (2.0 * x).sin(), epsilon = 1e-12);
        }
    }

    #[test]
    fn identity_observable_gives_one() {
        let id = HermitianGenerator::new(qru_algebra::identity(2), "id").unwrap();
        let steps = vec![GateStep::parameterized(pauli(Pauli::Y), 0, 0)];
        let model = QruModel::new(1, steps, id, None).unwrap();
        assert_abs_diff_eq!(hypothesis(&model, &[0.83], 0.0).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn rejects_wrong_observable_dimension() {
        let obs = pauli(Pauli::Z);
        assert!(matches!(
            QruModel::new(2, vec![], obs, None),
            Err(ModelError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rejects_gapped_parameter_indices() {
        let steps = vec![
            GateStep::parameterized(pauli(Pauli::X), 0, 0),
            GateStep::parameterized(pauli(Pauli::Y), 2, 0),
        ];
        assert!(matches!(
            QruModel::new(1, steps, pauli(Pauli::Z), None),
            Err(ModelError::BadParameterIndices { .. })
        ));
    }

    #[test]
    fn rejects_repeated_parameter_index() {
        let steps = vec![
            GateStep::parameterized(pauli(Pauli::X), 0, 0),
            GateStep::parameterized(pauli(Pauli::Y), 0, 0),
        ];
        assert!(matches!(
            QruModel::new(1, steps, pauli(Pauli::Z), None),
            Err(ModelError::BadParameterIndices { .. })
        ));
    }

    #[test]
    fn rejects_unnormalized_initial_state() {
        let state = ComplexVector::from_vec(vec![
            Complex64::new(0.5, 0.0),
            Complex64::new(0.5, 0.0),
        ]);
        assert!(matches!(
            QruModel::new(1, vec![], pauli(Pauli::Z), Some(state)),
            Err(ModelError::UnnormalizedState { .. })
        ));
    }

    #[test]
    fn rejects_non_unitary_fixed_gate() {
        let mut m = qru_algebra::identity(2);
        m[(0, 0)] = Complex64::new(2.0, 0.0);
        let steps = vec![GateStep::fixed(m, 0)];
        assert!(matches!(
            QruModel::new(1, steps, pauli(Pauli::Z), None),
            Err(ModelError::NonUnitaryGate { .. })
        ));
    }

    #[test]
    fn arity_mismatch_is_reported() {
        let model = cos_two_theta_model();
        assert!(matches!(
            hypothesis(&model, &[0.1, 0.2], 0.0),
            Err(ModelError::ArityMismatch {
                expected: 1,
                got: 2
            })
        ));
    }

    #[test]
    fn base_pqc_matches_model_at_x_zero() {
        let steps = vec![
            GateStep::parameterized(pauli(Pauli::X), 0, 0),
            GateStep::encoding(pauli(Pauli::Z), 0),
            GateStep::parameterized(pauli(Pauli::Y), 1, 1),
            GateStep::encoding(pauli(Pauli::Z), 1),
        ];
        let model = QruModel::new(1, steps, pauli(Pauli::X), None).unwrap();
        let base = base_pqc(&model);
        assert_eq!(base.n_params(), 2);
        assert_eq!(base.steps().len(), 2);
        let theta = [0.37, 1.12];
        for x in [0.0, 0.9, 2.4] {
            let via_base = hypothesis(&base, &theta, x).unwrap();
            let at_zero = hypothesis(&model, &theta, 0.0).unwrap();
            assert_abs_diff_eq!(via_base, at_zero, epsilon = 1e-12);
        }
    }

    #[test]
    fn state_norm_is_preserved() {
        let steps = vec![
            GateStep::parameterized(pauli(Pauli::X), 0, 0),
            GateStep::encoding(pauli(Pauli::Z), 0),
            GateStep::parameterized(pauli(Pauli::Y), 1, 1),
        ];
        let model = QruModel::new(1, steps, pauli(Pauli::Z), None).unwrap();
        let state = evaluate_state(&model, &[0.7, -1.9], 3.3).unwrap();
        assert_abs_diff_eq!(state.norm(), 1.0, epsilon = 1e-12);
    }
}
