//! Monte Carlo sampling from time-integrated stochastic bridges.
//!
//! A time-integrated bridge is the random variable `Z = ∫ f(Y(t)) dt` where the
//! driving process `Y` is conditioned on both its initial value `a` and its
//! final value `b`. Direct simulation of such conditional integrals is
//! expensive; this crate implements a two-stage alternative:
//!
//! * an **off-line stage** that compresses brute-force Monte Carlo runs into
//!   small grids of collocation points (quantiles of the conditional integral)
//!   and trains a feedforward regressor mapping model parameters to those
//!   grids ([`compression`], [`dataset`], [`neuralnet`]);
//! * an **on-line stage** that evaluates the regressor, interpolates
//!   collocation points for arbitrary boundary pairs `(a, b)`, and draws any
//!   number of samples through a low-degree polynomial map of standard
//!   Gaussians ([`sampler`]).
//!
//! Supported driving processes are arithmetic Brownian motion, geometric
//! Brownian motion and the Cox-Ingersoll-Ross process ([`models`]), with the
//! integrand transform either the identity or the square. [`finance`] builds
//! Heston log-price sampling and SABR conditional integrated variance on top,
//! benchmarked against brute-force Euler-Maruyama.

pub mod compression;
pub mod dataset;
pub mod error;
pub mod finance;
pub mod models;
pub mod neuralnet;
pub mod numerics;
pub mod rng;
pub mod sampler;

pub use error::{Error, Result};
