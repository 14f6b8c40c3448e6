//! Scalar and vector numerical primitives shared by every other module:
//! normal distribution functions, optimal collocation points, Vandermonde
//! machinery, quantiles, CDF distances, trapezoid integration and Latin
//! hypercube sampling.
//!
//! Everything here is pure and reentrant.

mod hermite;
mod lhs;
mod normal;
mod poly;
mod stats;

pub use hermite::{optimal_collocation_points, CollocationBasis};
pub use lhs::latin_hypercube;
pub use normal::{std_normal_cdf, std_normal_inv_cdf, std_normal_pdf, ProbLevel};
pub use poly::{lagrange_coefficients, polyval, vandermonde_solve_in_place};
pub use stats::{
    cdf_sup_distance, cdf_sup_distance_two_sample, empirical_quantile, quantile_sorted,
    trapezoid_step,
};
