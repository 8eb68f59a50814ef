//! Frequency-resolved statevector simulation.
//!
//! The state after a re-uploading circuit is a trigonometric polynomial in
//! the data variable: `|psi(x)> = sum_k exp(i mu.k x) c_k` with vector-valued
//! coefficients on an integer frequency lattice. This crate maintains the
//! coefficient columns exactly: unitaries multiply every column, encoding
//! gates shift eigencomponents along the lattice, and measuring an observable
//! yields the exact Fourier coefficients `a_omega` of the hypothesis
//! function. Everything downstream that reasons about spectra (variance
//! fits, Lipschitz bounds) reads them from here.

mod encoding;
mod error;
mod profile;
mod simulate;
mod state;

pub use encoding::apply_encoding;
pub use error::HarmonicError;
pub use profile::{conjugate_symmetry_deviation, measure_fourier, FrequencyProfile};
pub use simulate::{simulate_harmonic, simulate_harmonic_with_basis};
pub use state::{apply_unitary, frequency_weights, init_harmonic, HarmonicState};

// The lattice type is shared with the spectrum crate so kernels and states
// index frequencies identically.
pub use qru_spectrum::{FrequencyLattice, LatticePoint};

/// Default cap on populated lattice points per state.
///
/// Geometric encoding families grow the lattice exponentially in depth;
/// exceeding the cap is a hard error rather than a slow death.
pub const STATE_CAPACITY: usize = 1_000_000;

/// Coefficient entries below this magnitude are pruned after each encoding.
///
/// Keeps numerical noise from populating the lattice without affecting the
/// 1e-9 reconstruction tolerances.
pub const PRUNE_TOL: f64 = 1e-14;
