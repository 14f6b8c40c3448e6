//! Optimal collocation points for a standard normal "cheap" variable:
//! the roots of the probabilists' Hermite polynomial.

use super::normal::{std_normal_cdf, ProbLevel};
use crate::error::{Error, Result};

pub const MAX_POINTS: usize = 10;

/// The M original collocation points ξ_k together with their normal CDF
/// levels Φ(ξ_k).
#[derive(Debug, Clone)]
pub struct CollocationBasis {
    xi: Vec<f64>,
    levels: Vec<ProbLevel>,
}

impl CollocationBasis {
    pub fn len(&self) -> usize {
        self.xi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xi.is_empty()
    }

    pub fn xi(&self) -> &[f64] {
        &self.xi
    }

    pub fn levels(&self) -> &[ProbLevel] {
        &self.levels
    }

    /// Rebuilds a basis from stored ξ values (e.g. a deserialized grid file).
    pub fn from_xi(xi: Vec<f64>) -> Result<Self> {
        if xi.len() < 2 {
            return Err(Error::Grid("collocation basis needs at least 2 points".into()));
        }
        if xi.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Grid("collocation points must be strictly increasing".into()));
        }
        let levels = xi.iter().map(|&x| std_normal_cdf(x)).collect();
        Ok(CollocationBasis { xi, levels })
    }
}

/// Value and derivative of the probabilists' Hermite polynomial He_m.
///
/// Recurrence: He_0 = 1, He_1 = x, He_{n+1} = x·He_n - n·He_{n-1};
/// He_m' = m·He_{m-1}.
fn hermite_value_deriv(m: usize, x: f64) -> (f64, f64) {
    let mut prev = 1.0; // He_0
    let mut cur = x; // He_1
    if m == 0 {
        return (1.0, 0.0);
    }
    for n in 1..m {
        let next = x * cur - n as f64 * prev;
        prev = cur;
        cur = next;
    }
    (cur, m as f64 * prev)
}

/// Number of eigenvalues of the Jacobi matrix below `lambda` via the Sturm
/// sequence of the shifted LDLᵀ recurrence. The Jacobi matrix of the
/// probabilists' Hermite family has zero diagonal and off-diagonals √k.
fn eigen_count_below(m: usize, lambda: f64) -> usize {
    let mut count = 0;
    let mut d = -lambda;
    if d < 0.0 {
        count += 1;
    }
    for k in 1..m {
        if d.abs() < 1e-300 {
            d = -1e-300;
        }
        d = -lambda - k as f64 / d;
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// Computes the M optimal original collocation points as the roots of He_M,
/// sorted ascending.
///
/// Eigenvalues of the symmetric tridiagonal Jacobi matrix are isolated by
/// Sturm bisection, polished by Newton on the recurrence, and symmetrized
/// about zero (the root set is antisymmetric; odd M has an exact zero root).
pub fn optimal_collocation_points(m: usize) -> Result<CollocationBasis> {
    if !(2..=MAX_POINTS).contains(&m) {
        return Err(Error::invalid(
            "M",
            format!("supported collocation counts are 2..={MAX_POINTS}, got {m}"),
        ));
    }

    // Gershgorin bound on the spectrum.
    let bound = 2.0 * ((m - 1) as f64).sqrt() + 1.0;
    let mut xi = Vec::with_capacity(m);
    for k in 0..m {
        let (mut lo, mut hi) = (-bound, bound);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if eigen_count_below(m, mid) <= k {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-13 {
                break;
            }
        }
        let mut x = 0.5 * (lo + hi);
        for _ in 0..4 {
            let (v, dv) = hermite_value_deriv(m, x);
            if dv.abs() > 0.0 {
                x -= v / dv;
            }
        }
        xi.push(x);
    }
    xi.sort_by(|a, b| a.partial_cmp(b).unwrap());

    // Enforce exact antisymmetry.
    for k in 0..m / 2 {
        let s = 0.5 * (xi[m - 1 - k] - xi[k]);
        xi[k] = -s;
        xi[m - 1 - k] = s;
    }
    if m % 2 == 1 {
        xi[m / 2] = 0.0;
    }

    for &x in &xi {
        let (v, _) = hermite_value_deriv(m, x);
        debug_assert!(v.abs() <= 1e-10, "Hermite residual {v} at root {x}");
    }

    let levels = xi.iter().map(|&x| std_normal_cdf(x)).collect();
    Ok(CollocationBasis { xi, levels })
}
