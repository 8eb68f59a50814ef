//! Sparse discrete convolution of spectrum kernels.

use crate::error::SpectrumError;
use crate::kernel::SpectrumKernel;
use crate::lattice::LatticePoint;
use crate::KERNEL_CAPACITY;
use std::collections::BTreeMap;

/// The identity element of convolution: all weight at the origin.
pub fn delta_kernel(mu: Vec<f64>, source_dim: usize) -> SpectrumKernel {
    let origin: LatticePoint = vec![0; mu.len()];
    let mut weights = BTreeMap::new();
    weights.insert(origin, 1.0);
    SpectrumKernel::new(mu, weights, source_dim).expect("delta kernel is always valid")
}

/// Convolves two kernels on the same lattice.
///
/// `(a * b)(k) = sum_l a(l) b(k - l)` by sparse accumulation over populated
/// points. Means add and covariances add under this operation.
pub fn convolve(a: &SpectrumKernel, b: &SpectrumKernel) -> Result<SpectrumKernel, SpectrumError> {
    if !a.lattice().compatible(b.lattice()) {
        return Err(SpectrumError::LatticeMismatch {
            left: a.lattice().mu().to_vec(),
            left_dims: a.lattice().dims(),
            right: b.lattice().mu().to_vec(),
            right_dims: b.lattice().dims(),
        });
    }
    let mut weights: BTreeMap<LatticePoint, f64> = BTreeMap::new();
    for (ka, &wa) in a.weights() {
        for (kb, &wb) in b.weights() {
            let sum: LatticePoint = ka.iter().zip(kb).map(|(&x, &y)| x + y).collect();
            *weights.entry(sum).or_insert(0.0) += wa * wb;
            if weights.len() > KERNEL_CAPACITY {
                return Err(SpectrumError::CapacityExceeded {
                    points: weights.len(),
                    cap: KERNEL_CAPACITY,
                });
            }
        }
    }
    // Products of far-tail weights can underflow to zero; such points are
    // numerically unpopulated and would violate kernel positivity.
    weights.retain(|_, w| *w > 0.0);
    SpectrumKernel::new(a.lattice().mu().to_vec(), weights, a.source_dim())
}

/// The L-fold self-convolution `k^{*L}` by iterated squaring.
pub fn power_convolve(kernel: &SpectrumKernel, l: usize) -> Result<SpectrumKernel, SpectrumError> {
    if l == 0 {
        return Err(SpectrumError::InvalidPower { power: 0 });
    }
    let mut result: Option<SpectrumKernel> = None;
    let mut base = kernel.clone();
    let mut remaining = l;
    loop {
        if remaining & 1 == 1 {
            result = Some(match result {
                None => base.clone(),
                Some(acc) => convolve(&acc, &base)?,
            });
        }
        remaining >>= 1;
        if remaining == 0 {
            break;
        }
        base = convolve(&base, &base)?;
    }
    Ok(result.expect("l >= 1 guarantees at least one factor"))
}
