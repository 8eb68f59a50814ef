//! Builders for standard generator families.

use crate::error::AlgebraError;
use crate::generator::HermitianGenerator;
use crate::matrix::{identity, kron, ComplexMatrix};
use crate::MAX_QUBITS;
use num_complex::Complex64;

/// Single-qubit Pauli axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    /// The 2x2 Pauli matrix for this axis.
    pub fn matrix(self) -> ComplexMatrix {
        let (zero, one) = (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0));
        let i = Complex64::new(0.0, 1.0);
        match self {
            Pauli::X => ComplexMatrix::from_row_slice(2, 2, &[zero, one, one, zero]),
            Pauli::Y => ComplexMatrix::from_row_slice(2, 2, &[zero, -i, i, zero]),
            Pauli::Z => ComplexMatrix::from_row_slice(2, 2, &[one, zero, zero, -one]),
        }
    }

    fn letter(self) -> char {
        match self {
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Description of a generator to build on an n-qubit register.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    /// Tensor product of Paulis on the listed qubits, identity elsewhere.
    PauliString(Vec<(usize, Pauli)>),
    /// Collective sum over all qubits: `sum_q P_q`.
    Collective(Pauli),
    /// Nearest-neighbour coupling with wraparound: `sum_q Z_q Z_{q+1 mod n}`.
    ///
    /// At n = 2 both ordered pairs contribute, giving `2 * Z tensor Z`.
    CyclicZz,
    /// Coupling over every unordered pair: `sum_{q<q'} Z_q Z_{q'}`.
    ///
    /// The permutation-invariant interaction; unlike [`GeneratorSpec::CyclicZz`]
    /// it preserves the fully symmetric subspace on any register size.
    AllPairsZz,
    /// Caller-supplied Hermitian matrix.
    Explicit(ComplexMatrix),
}

/// Builds the 2^n-dimensional generator described by `spec`.
pub fn build_generator(
    spec: &GeneratorSpec,
    n_qubits: usize,
) -> Result<HermitianGenerator, AlgebraError> {
    if n_qubits == 0 {
        return Err(AlgebraError::InvalidDimension {
            dim: 0,
            reason: "qubit count must be positive".into(),
        });
    }
    if n_qubits > MAX_QUBITS {
        return Err(AlgebraError::TooManyQubits {
            n_qubits,
            max: MAX_QUBITS,
        });
    }
    let dim = 1usize << n_qubits;
    match spec {
        GeneratorSpec::PauliString(factors) => {
            let mut label = String::new();
            for &(q, _) in factors {
                if q >= n_qubits {
                    return Err(AlgebraError::QubitOutOfRange {
                        index: q,
                        n_qubits,
                    });
                }
            }
            let mut per_qubit: Vec<Option<Pauli>> = vec![None; n_qubits];
            for &(q, p) in factors {
                per_qubit[q] = Some(p);
                label.push(p.letter());
                label.push_str(&q.to_string());
            }
            if label.is_empty() {
                label.push('I');
            }
            let mut matrix = ComplexMatrix::from_element(1, 1, Complex64::new(1.0, 0.0));
            for slot in &per_qubit {
                let factor = match slot {
                    Some(p) => p.matrix(),
                    None => identity(2),
                };
                matrix = kron(&matrix, &factor);
            }
            HermitianGenerator::new(matrix, label)
        }
        GeneratorSpec::Collective(p) => {
            let mut matrix = ComplexMatrix::zeros(dim, dim);
            for q in 0..n_qubits {
                matrix += single_site(p.matrix(), q, n_qubits);
            }
            HermitianGenerator::new(matrix, format!("collective_{}", p.letter()))
        }
        GeneratorSpec::CyclicZz => {
            let z = Pauli::Z.matrix();
            let mut matrix = ComplexMatrix::zeros(dim, dim);
            for q in 0..n_qubits {
                let q_next = (q + 1) % n_qubits;
                matrix += two_site(&z, &z, q, q_next, n_qubits);
            }
            HermitianGenerator::new(matrix, "cyclic_ZZ")
        }
        GeneratorSpec::AllPairsZz => {
            let z = Pauli::Z.matrix();
            let mut matrix = ComplexMatrix::zeros(dim, dim);
            for q in 0..n_qubits {
                for q_other in (q + 1)..n_qubits {
                    matrix += two_site(&z, &z, q, q_other, n_qubits);
                }
            }
            HermitianGenerator::new(matrix, "all_pairs_ZZ")
        }
        GeneratorSpec::Explicit(matrix) => {
            if matrix.nrows() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    left: matrix.nrows(),
                    right: dim,
                });
            }
            HermitianGenerator::new(matrix.clone(), "explicit")
        }
    }
}

/// `op` acting on qubit `q`, identity on the rest.
fn single_site(op: ComplexMatrix, q: usize, n_qubits: usize) -> ComplexMatrix {
    let mut matrix = ComplexMatrix::from_element(1, 1, Complex64::new(1.0, 0.0));
    for site in 0..n_qubits {
        let factor = if site == q { op.clone() } else { identity(2) };
        matrix = kron(&matrix, &factor);
    }
    matrix
}

/// `a` on qubit `qa` and `b` on qubit `qb`, identity elsewhere.
///
/// Degenerate case `qa == qb` multiplies the two operators on that site,
/// which is what the n = 2 cyclic wraparound needs.
fn two_site(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    qa: usize,
    qb: usize,
    n_qubits: usize,
) -> ComplexMatrix {
    let mut matrix = ComplexMatrix::from_element(1, 1, Complex64::new(1.0, 0.0));
    for site in 0..n_qubits {
        let factor = if site == qa && site == qb {
            a * b
        } else if site == qa {
            a.clone()
        } else if site == qb {
            b.clone()
        } else {
            identity(2)
        };
        matrix = kron(&matrix, &factor);
    }
    matrix
}
