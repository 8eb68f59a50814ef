//! Audit of the witness-based gradient-variance bound.

use crate::error::GradientsError;
use crate::scan::VarianceScan;
use crate::witness::{WitnessEstimate, WitnessSide};
use qru_model::{GateKind, QruModel};
use serde::Serialize;

/// Outcome of one variance-bound audit for a single parameter.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub param_index: usize,
    /// `|E_x Var_theta d_j h(x) - Var_theta d_j h(0)|`.
    pub lhs: f64,
    /// Combined standard error of the two variance estimates.
    pub lhs_se: f64,
    /// `4 ||V_j||^2 (||H||^2 B_R + ||rho_0||^2 B_L)` with raw witnesses.
    pub rhs: f64,
    /// Whether `lhs <= rhs + 3 lhs_se`.
    pub pass: bool,
    /// `8 L ||V_j||^2 ||H||^2 ||rho_0||^2 max_l A_l` when layerwise
    /// witnesses are supplied.
    pub layered_rhs: Option<f64>,
    pub layered_pass: Option<bool>,
}

impl BoundReport {
    pub fn csv_header() -> &'static str {
        "param,lhs,lhs_se,rhs,pass,layered_rhs,layered_pass"
    }

    pub fn csv_row(&self) -> String {
        let fmt_opt_f = |v: Option<f64>| v.map_or(String::new(), |x| x.to_string());
        let fmt_opt_b = |v: Option<bool>| v.map_or(String::new(), |x| x.to_string());
        format!(
            "{},{},{},{},{},{},{}",
            self.param_index,
            self.lhs,
            self.lhs_se,
            self.rhs,
            self.pass,
            fmt_opt_f(self.layered_rhs),
            fmt_opt_b(self.layered_pass)
        )
    }
}

fn expect_side(
    estimate: &WitnessEstimate,
    expected: WitnessSide,
    name: &'static str,
) -> Result<(), GradientsError> {
    if estimate.side != expected {
        return Err(GradientsError::WrongWitnessSide {
            expected: name,
            got: match estimate.side {
                WitnessSide::Right => "right",
                WitnessSide::Left => "left",
                WitnessSide::Layerwise => "layerwise",
            },
        });
    }
    Ok(())
}

/// Checks the witness bound on the data dependence of one parameter's
/// gradient variance.
///
/// The raw (upward-biased) witness values enter the right-hand side: a
/// looser upper bound stays an upper bound. The initial state is pure, so
/// its operator norm is one. When `layerwise` witnesses are supplied, the
/// coarser layer-resolved bound is evaluated as well, with the layer count
/// taken from the number of witnesses.
pub fn check_variance_bound(
    model: &QruModel,
    scan: &VarianceScan,
    right: &WitnessEstimate,
    left: &WitnessEstimate,
    layerwise: Option<&[WitnessEstimate]>,
) -> Result<BoundReport, GradientsError> {
    expect_side(right, WitnessSide::Right, "right")?;
    expect_side(left, WitnessSide::Left, "left")?;
    if right.index != left.index {
        return Err(GradientsError::MismatchedIndices {
            right: right.index,
            left: left.index,
        });
    }
    let j = right.index;
    if j >= scan.expected_variance.len() {
        return Err(GradientsError::UnknownParameter {
            index: j,
            n_params: scan.expected_variance.len(),
        });
    }
    let generator_norm = model
        .steps()
        .iter()
        .find_map(|s| match &s.kind {
            GateKind::Parameterized {
                generator,
                param_index,
            } if *param_index == j => Some(generator.spectral_norm()),
            _ => None,
        })
        .ok_or(GradientsError::UnknownParameter {
            index: j,
            n_params: model.n_params(),
        })?;
    let observable_norm = model.observable().spectral_norm();
    let state_norm = 1.0;

    let lhs = (scan.expected_variance[j] - scan.variance_at_zero[j]).abs();
    let lhs_se =
        (scan.expected_variance_se[j].powi(2) + scan.variance_at_zero_se[j].powi(2)).sqrt();
    let rhs = 4.0
        * generator_norm.powi(2)
        * (observable_norm.powi(2) * right.raw + state_norm * state_norm * left.raw);
    let pass = lhs <= rhs + 3.0 * lhs_se;

    let (layered_rhs, layered_pass) = match layerwise {
        Some(witnesses) => {
            for w in witnesses {
                expect_side(w, WitnessSide::Layerwise, "layerwise")?;
            }
            let max_witness = witnesses.iter().map(|w| w.raw).fold(0.0, f64::max);
            let value = 8.0
                * witnesses.len() as f64
                * generator_norm.powi(2)
                * observable_norm.powi(2)
                * state_norm.powi(2)
                * max_witness;
            (Some(value), Some(lhs <= value + 3.0 * lhs_se))
        }
        None => (None, None),
    };

    Ok(BoundReport {
        param_index: j,
        lhs,
        lhs_se,
        rhs,
        pass,
        layered_rhs,
        layered_pass,
    })
}
