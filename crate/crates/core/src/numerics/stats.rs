//! Empirical quantiles, CDF sup-distances and the trapezoid accumulator.

use super::normal::ProbLevel;
use crate::error::{Error, Result};

fn sort_copy(samples: &[f64]) -> Vec<f64> {
    let mut s = samples.to_vec();
    s.sort_unstable_by(|a, b| a.partial_cmp(b).expect("NaN in sample"));
    s
}

/// Type-7 quantile of an already-sorted slice: linear interpolation of order
/// statistics at index h = (n-1)p.
pub fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    debug_assert!(!sorted.is_empty());
    debug_assert!((0.0..=1.0).contains(&p));
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = (n - 1) as f64 * p;
    let lo = h.floor() as usize;
    if lo + 1 >= n {
        return sorted[n - 1];
    }
    let w = h - lo as f64;
    sorted[lo] + w * (sorted[lo + 1] - sorted[lo])
}

/// Type-7 empirical quantile of an unsorted sample.
pub fn empirical_quantile(samples: &[f64], p: ProbLevel) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::Domain("quantile of empty sample".into()));
    }
    Ok(quantile_sorted(&sort_copy(samples), p.value()))
}

/// One-sample Kolmogorov statistic sup_x |F̂(x) - F(x)|, evaluated at both
/// one-sided jumps of the empirical CDF.
pub fn cdf_sup_distance<F>(samples: &[f64], cdf: F) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if samples.is_empty() {
        return Err(Error::Domain("CDF distance of empty sample".into()));
    }
    let sorted = sort_copy(samples);
    let n = sorted.len() as f64;
    let mut sup: f64 = 0.0;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        sup = sup.max((i as f64 / n - f).abs());
        sup = sup.max(((i + 1) as f64 / n - f).abs());
    }
    Ok(sup)
}

/// Two-sample sup-distance sup_x |F̂_a(x) - F̂_b(x)| by a merge walk.
/// Symmetric in its arguments and zero iff the empirical CDFs coincide.
pub fn cdf_sup_distance_two_sample(a: &[f64], b: &[f64]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::Domain("CDF distance of empty sample".into()));
    }
    let xs = sort_copy(a);
    let ys = sort_copy(b);
    let (n, m) = (xs.len() as f64, ys.len() as f64);
    let (mut i, mut j) = (0usize, 0usize);
    let mut sup: f64 = 0.0;
    while i < xs.len() || j < ys.len() {
        // Advance through every sample equal to the current merged value
        // before recording the gap, so ties are handled exactly.
        let v = match (xs.get(i), ys.get(j)) {
            (Some(&x), Some(&y)) => x.min(y),
            (Some(&x), None) => x,
            (None, Some(&y)) => y,
            (None, None) => break,
        };
        while i < xs.len() && xs[i] <= v {
            i += 1;
        }
        while j < ys.len() && ys[j] <= v {
            j += 1;
        }
        sup = sup.max((i as f64 / n - j as f64 / m).abs());
    }
    Ok(sup)
}

/// One trapezoid-rule increment: prev + dt·(f_prev + f_next)/2.
/// Accumulated over a path it reproduces the full trapezoid sum.
pub fn trapezoid_step(prev_integral: f64, f_prev: f64, f_next: f64, dt: f64) -> f64 {
    debug_assert!(dt > 0.0);
    prev_integral + 0.5 * dt * (f_prev + f_next)
}
