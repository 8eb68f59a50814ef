//! Spectrum kernels: the normalized eigenvalue-multiplicity functions of
//! Hermitian generators on integer frequency lattices.
//!
//! A generator g with eigenvalues {lambda} defines a kernel K_g assigning
//! each lattice point k (with lambda = mu . k) the weight m(lambda)/N.
//! Interleaving L encoding gates convolves their kernels, so this crate
//! provides sparse discrete convolution, kernel moments, and the Gaussian
//! limit that the convolved kernels approach as L grows.

mod convolve;
mod error;
mod kernel;
mod lattice;
mod moments;
mod mu;

pub use convolve::{convolve, delta_kernel, power_convolve};
pub use error::SpectrumError;
pub use kernel::{extract_kernel, kernel_map, KernelMap, SpectrumKernel};
pub use lattice::{mu_compatible, FrequencyLattice, LatticePoint};
pub use moments::{gaussian_limit, kernel_moments, total_variation, GaussianLimit};
pub use mu::{detect_mu, solve_offsets};

/// Hard cap on populated lattice points per kernel.
///
/// Convolutions that would exceed this fail loudly instead of thrashing;
/// geometric-family kernels reach 2^L points and hit this near L = 20.
pub const KERNEL_CAPACITY: usize = 1_000_000;

/// Largest integer allowed in rational approximation and lattice indices.
///
/// Base-frequency detection rationalizes eigenvalue-gap ratios up to this
/// denominator; spectra needing more are reported as anharmonic.
pub const MAX_DENOMINATOR: u64 = 1_000_000;
