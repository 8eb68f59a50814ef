//! Absorption-witness estimation by Monte-Carlo trace norms.
//!
//! A witness is the data average of the trace norm of a parameter-averaged
//! two-copy difference operator. The trace norm of an averaged noisy matrix
//! is biased upward, so every estimate carries a half-sample bias estimate:
//! the 20 accumulation chunks are split into random halves whose norms
//! converge like `1/sqrt(n)`, and Richardson extrapolation over the two
//! sample sizes yields the reported correction.

use crate::error::GradientsError;
use crate::sampler::{DataSampler, ThetaSampler};
use qru_algebra::rng::seeded_rng;
use qru_algebra::{identity, kron, schatten_norm, ComplexMatrix, SchattenOrder};
use qru_model::{GateKind, GateStep, Layer, ModelError, QruModel};
use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::fmt;

/// Two-copy operators are `4^n` dimensional; past five qubits they no
/// longer fit in memory.
const MAX_WITNESS_QUBITS: usize = 5;

/// Parameter draws accumulate into this many chunks for half-sample splits.
const N_CHUNKS: usize = 20;

/// Random half-partitions averaged per bias estimate.
const N_SPLITS: usize = 8;

/// Richardson divisor for a `1/sqrt(n)`-decaying bias measured between the
/// half and full sample sizes.
const BIAS_DIVISOR: f64 = std::f64::consts::SQRT_2 - 1.0;

/// Which averaged difference operator the witness measures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessSide {
    /// Two-copy projector of the state entering the gate.
    Right,
    /// Two-copy Heisenberg observable from the gate onward.
    Left,
    /// Two-copy layer unitary with and without its encoding.
    Layerwise,
}

impl WitnessSide {
    fn as_str(self) -> &'static str {
        match self {
            WitnessSide::Right => "right",
            WitnessSide::Left => "left",
            WitnessSide::Layerwise => "layerwise",
        }
    }
}

impl fmt::Display for WitnessSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One estimated absorption witness.
#[derive(Debug, Clone, Serialize)]
pub struct WitnessEstimate {
    pub side: WitnessSide,
    /// Parameter index for right/left witnesses, layer index otherwise.
    pub index: usize,
    /// Trace norm of the full-sample mean operator, biased upward.
    pub raw: f64,
    /// Half-sample Richardson estimate of that upward bias.
    pub bias: f64,
    /// Debiased witness, clamped to zero from below.
    pub value: f64,
    pub n_theta: usize,
    /// Descriptor of the data distribution averaged over.
    pub data: String,
}

impl WitnessEstimate {
    fn exact_zero(side: WitnessSide, index: usize, n_theta: usize, data: String) -> Self {
        Self {
            side,
            index,
            raw: 0.0,
            bias: 0.0,
            value: 0.0,
            n_theta,
            data,
        }
    }

    pub fn csv_header() -> &'static str {
        "side,index,raw,bias,value,n_theta,data"
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.side, self.index, self.raw, self.bias, self.value, self.n_theta, self.data
        )
    }
}

/// Data-averaged trace norm of the parameter-averaged difference operator,
/// with half-sample bias: returns `(raw, bias, debiased)`.
fn debiased_mean_trace_norm<R, F>(
    x_nodes: &[f64],
    theta_sampler: &ThetaSampler,
    n_theta: usize,
    rng: &mut R,
    diff_op: F,
) -> (f64, f64, f64)
where
    R: Rng + ?Sized,
    F: Fn(&[f64], f64) -> ComplexMatrix + Sync,
{
    assert!(
        n_theta % N_CHUNKS == 0 && n_theta >= N_CHUNKS,
        "n_theta must be a positive multiple of {N_CHUNKS}"
    );
    let chunk = n_theta / N_CHUNKS;
    let trace_norm =
        |m: &ComplexMatrix| schatten_norm(m, SchattenOrder::Trace).expect("square operator");
    let mut raw_sum = 0.0;
    let mut half_sum = 0.0;
    for &x in x_nodes {
        let thetas: Vec<Vec<f64>> = (0..n_theta).map(|_| theta_sampler.sample(rng)).collect();
        let chunk_sums: Vec<ComplexMatrix> = (0..N_CHUNKS)
            .into_par_iter()
            .map(|c| {
                thetas[c * chunk..(c + 1) * chunk]
                    .iter()
                    .map(|theta| diff_op(theta, x))
                    .reduce(|a, b| a + b)
                    .expect("chunk holds at least one draw")
            })
            .collect();
        let total = chunk_sums
            .iter()
            .cloned()
            .reduce(|a, b| a + b)
            .expect("at least one chunk");
        raw_sum += trace_norm(&total) / n_theta as f64;

        let mut split_mean = 0.0;
        let mut order: Vec<usize> = (0..N_CHUNKS).collect();
        for _ in 0..N_SPLITS {
            order.shuffle(rng);
            let half_norm = |ids: &[usize]| {
                let sum = ids
                    .iter()
                    .map(|&i| chunk_sums[i].clone())
                    .reduce(|a, b| a + b)
                    .expect("half holds chunks");
                trace_norm(&sum) / (n_theta / 2) as f64
            };
            split_mean +=
                0.5 * (half_norm(&order[..N_CHUNKS / 2]) + half_norm(&order[N_CHUNKS / 2..]));
        }
        half_sum += split_mean / N_SPLITS as f64;
    }
    let raw = raw_sum / x_nodes.len() as f64;
    let half = half_sum / x_nodes.len() as f64;
    let bias = ((half - raw) / BIAS_DIVISOR).max(0.0);
    (raw, bias, (raw - bias).max(0.0))
}

fn check_capacity(n_qubits: usize) -> Result<(), GradientsError> {
    if n_qubits > MAX_WITNESS_QUBITS {
        return Err(GradientsError::TooManyQubits {
            n_qubits,
            max: MAX_WITNESS_QUBITS,
        });
    }
    Ok(())
}

/// Estimates the right or left absorption witness of one parameterized gate:
/// the data average of `|| E_theta[ O(x)^{(x2)} - O(0)^{(x2)} ] ||_1`, where
/// `O` is the state projector entering the gate (right) or the Heisenberg
/// observable from the gate onward (left).
///
/// When the chosen side contains no encoding gate, the operator difference
/// vanishes identically and the witness is returned as exactly zero.
pub fn absorption_witness(
    model: &QruModel,
    param_index: usize,
    side: WitnessSide,
    theta_sampler: &ThetaSampler,
    data_sampler: &DataSampler,
    n_theta: usize,
    seed: u64,
) -> Result<WitnessEstimate, GradientsError> {
    check_capacity(model.n_qubits())?;
    if theta_sampler.len() != model.n_params() {
        return Err(GradientsError::ArityMismatch {
            expected: model.n_params(),
            got: theta_sampler.len(),
        });
    }
    let position = model
        .steps()
        .iter()
        .position(|s| {
            matches!(&s.kind, GateKind::Parameterized { param_index: p, .. } if *p == param_index)
        })
        .ok_or(GradientsError::UnknownParameter {
            index: param_index,
            n_params: model.n_params(),
        })?;
    let steps: &[GateStep] = match side {
        WitnessSide::Right => &model.steps()[..position],
        WitnessSide::Left => &model.steps()[position..],
        WitnessSide::Layerwise => {
            return Err(GradientsError::WrongWitnessSide {
                expected: "right or left",
                got: "layerwise",
            })
        }
    };
    if !steps.iter().any(GateStep::is_encoding) {
        return Ok(WitnessEstimate::exact_zero(
            side,
            param_index,
            n_theta,
            data_sampler.describe(),
        ));
    }

    let mut rng = seeded_rng(seed);
    let x_nodes = data_sampler.nodes(data_sampler.default_node_count(), &mut rng);
    let two_copy = |theta: &[f64], x: f64| -> ComplexMatrix {
        match side {
            WitnessSide::Right => {
                let mut psi = model.initial_state().clone();
                for step in steps {
                    psi = step.apply(&psi, theta, x);
                }
                let rho = &psi * psi.adjoint();
                kron(&rho, &rho)
            }
            WitnessSide::Left => {
                let mut heis = model.observable().matrix().clone();
                for step in steps.iter().rev() {
                    let u = step.unitary(theta, x);
                    heis = u.adjoint() * heis * u;
                }
                kron(&heis, &heis)
            }
            WitnessSide::Layerwise => unreachable!("rejected above"),
        }
    };
    let diff = |theta: &[f64], x: f64| two_copy(theta, x) - two_copy(theta, 0.0);
    let (raw, bias, value) =
        debiased_mean_trace_norm(&x_nodes, theta_sampler, n_theta, &mut rng, diff);
    Ok(WitnessEstimate {
        side,
        index: param_index,
        raw,
        bias,
        value,
        n_theta,
        data: data_sampler.describe(),
    })
}

/// Estimates the layerwise absorption witness
/// `E_x || E_theta[ (V(x) u(theta))^{(x2)} - u(theta)^{(x2)} ] ||_1` for one
/// encoding-terminated layer, where `u` is the layer's processing block and
/// `V(x)` its encoding unitary.
pub fn layerwise_witness(
    layer: &Layer,
    layer_index: usize,
    theta_sampler: &ThetaSampler,
    data_sampler: &DataSampler,
    n_theta: usize,
    seed: u64,
) -> Result<WitnessEstimate, GradientsError> {
    let dim = layer.encoding.dim();
    check_capacity(dim.ilog2() as usize)?;
    for step in &layer.block {
        if step.dim() != dim {
            return Err(GradientsError::Model(ModelError::DimensionMismatch {
                context: "layer block step".into(),
                expected: dim,
                got: step.dim(),
            }));
        }
        if let GateKind::Parameterized { param_index, .. } = &step.kind {
            if *param_index >= theta_sampler.len() {
                return Err(GradientsError::ArityMismatch {
                    expected: param_index + 1,
                    got: theta_sampler.len(),
                });
            }
        }
    }

    let mut rng = seeded_rng(seed);
    let x_nodes = data_sampler.nodes(data_sampler.default_node_count(), &mut rng);
    let diff = |theta: &[f64], x: f64| -> ComplexMatrix {
        let mut block = identity(dim);
        for step in &layer.block {
            block = step.unitary(theta, 0.0) * block;
        }
        let encoded = layer.encoding.expm_i(x) * &block;
        kron(&encoded, &encoded) - kron(&block, &block)
    };
    let (raw, bias, value) =
        debiased_mean_trace_norm(&x_nodes, theta_sampler, n_theta, &mut rng, diff);
    Ok(WitnessEstimate {
        side: WitnessSide::Layerwise,
        index: layer_index,
        raw,
        bias,
        value,
        n_theta,
        data: data_sampler.describe(),
    })
}
