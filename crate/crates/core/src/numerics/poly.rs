//! Vandermonde systems and polynomial evaluation for the collocation
//! interpolant g_M(x) = Σ α_i x^i.

use super::hermite::CollocationBasis;
use crate::error::{Error, Result};

/// Solves the primal Vandermonde system Σ_i α_i x_k^i = f_k in place,
/// replacing `values` with the monomial coefficients α.
///
/// Björck-Pereyra: a divided-difference sweep to Newton form followed by the
/// basis change back to monomials. O(n²), numerically stable for the small
/// well-separated node sets used here, and allocation-free so it can sit in
/// the per-sample hot path.
pub fn vandermonde_solve_in_place(nodes: &[f64], values: &mut [f64]) {
    let n = nodes.len();
    assert_eq!(n, values.len(), "node/value length mismatch");
    debug_assert!(
        nodes.windows(2).all(|w| w[0] < w[1]),
        "Vandermonde nodes must be strictly increasing"
    );
    for k in 0..n.saturating_sub(1) {
        for j in (k + 1..n).rev() {
            values[j] = (values[j] - values[j - 1]) / (nodes[j] - nodes[j - k - 1]);
        }
    }
    for k in (0..n.saturating_sub(1)).rev() {
        for j in k..n - 1 {
            values[j] -= nodes[k] * values[j + 1];
        }
    }
}

/// Coefficients α of the Lagrange interpolant through (ξ_k, z_k).
pub fn lagrange_coefficients(basis: &CollocationBasis, z: &[f64]) -> Result<Vec<f64>> {
    if z.len() != basis.len() {
        return Err(Error::invalid(
            "z",
            format!("expected {} values, got {}", basis.len(), z.len()),
        ));
    }
    let mut alpha = z.to_vec();
    vandermonde_solve_in_place(basis.xi(), &mut alpha);
    Ok(alpha)
}

/// Horner evaluation of Σ α_i x^i.
pub fn polyval(alpha: &[f64], x: f64) -> f64 {
    assert!(!alpha.is_empty(), "polyval needs at least one coefficient");
    alpha.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}
