//! Dense complex linear algebra for quantum re-uploading circuits.
//!
//! Provides the matrix type shared by all higher-level crates, Hermitian
//! generators with cached eigendecompositions, matrix exponentials,
//! Haar-random unitary sampling, Schatten norms, and builders for the
//! standard generator families (Pauli strings, collective sums, coupled ZZ).
//!
//! Everything here is dense. System sizes are capped at [`MAX_QUBITS`]
//! qubits because two-copy objects used downstream need 4^n dimensions.

mod builders;
mod error;
mod generator;
mod haar;
mod matrix;
mod norms;
pub mod rng;

pub use builders::{build_generator, GeneratorSpec, Pauli};
pub use error::AlgebraError;
pub use generator::{EigenGroup, HermitianGenerator};
pub use haar::{haar_unitary, haar_unitary_from_rng};
pub use matrix::{
    identity, is_hermitian, is_unitary, kron, max_abs_diff, ComplexMatrix, ComplexVector,
};
pub use norms::{expm_i_matrix, schatten_norm, SchattenOrder};

/// Largest supported system size in qubits.
///
/// Dense 2^n matrices stay tractable up to here; two-copy witness objects
/// (4^n dimensional) impose stricter caps enforced by their own call sites.
pub const MAX_QUBITS: usize = 12;
