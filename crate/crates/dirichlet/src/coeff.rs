//! Expected-absolute-coefficient bound per frequency.

/// Bound on `E[|a_k|] / ||H||` for a Fourier coefficient whose squared
/// magnitude is dominated by a Dirichlet weight with concentration
/// `alpha_k`: the tighter of `alpha_k / (alpha_k + 1/2)` and the headline
/// `2 alpha_k`. Monotone increasing in `alpha_k` and below 1 everywhere.
pub fn expected_abs_coeff_bound(alpha_k: f64) -> f64 {
    assert!(alpha_k > 0.0, "concentration must be positive");
    (alpha_k / (alpha_k + 0.5)).min(2.0 * alpha_k)
}
