//! Monte-Carlo diagnostics for gradient structure in re-uploading circuits.
//!
//! Four instruments:
//! - [`variance_scan`]: per-parameter gradient variances over the data
//!   distribution and at the data origin;
//! - [`absorption_witness`] / [`layerwise_witness`]: trace-norm witnesses of
//!   how much data dependence the parameter average fails to absorb;
//! - [`check_variance_bound`]: the witness bound auditing the variance
//!   difference;
//! - [`information_content`]: a random-walk entropy proxy for the mean
//!   gradient norm.
//!
//! Every operation takes an explicit seed and derives all randomness from
//! it. Monte-Carlo loops parallelize over parameter draws after the draws
//! themselves are taken sequentially, so results do not depend on the
//! thread count.

mod bound;
mod error;
mod ic;
mod sampler;
mod scan;
mod witness;

pub use bound::{check_variance_bound, BoundReport};
pub use error::GradientsError;
pub use ic::{default_eps_grid, information_content, InformationContent, WalkConfig};
pub use sampler::{AngleSampler, DataSampler, ThetaSampler};
pub use scan::{variance_scan, VarianceScan};
pub use witness::{absorption_witness, layerwise_witness, WitnessEstimate, WitnessSide};
