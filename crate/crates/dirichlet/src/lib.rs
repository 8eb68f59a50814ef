//! Dirichlet statistics of frequency weights.
//!
//! Typical (Haar-random) circuits spread their Fourier weight according to a
//! Dirichlet distribution whose concentration parameters come from the
//! convolved spectrum kernel. This crate provides the parameter extraction,
//! exact moments, sampling, the expected-absolute-coefficient bound, and the
//! concentration tail bounds consumed by the Lipschitz analysis.

mod coeff;
mod params;
mod tail;

pub use coeff::expected_abs_coeff_bound;
pub use params::{
    dirichlet_moment, dirichlet_sample, dirichlet_sample_from_rng, params_from_kernel,
    DirichletParams,
};
pub use tail::{tail_bound, tail_denominator, TailMode};
