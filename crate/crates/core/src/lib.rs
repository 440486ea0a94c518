//! Monte Carlo and reference solvers for the fractional KPP equation
//!
//! D_t^alpha u = D_x^{beta,theta} u / 2 + u^2 - u
//!
//! with a Caputo derivative in time and a Riesz–Feller derivative in space.

pub mod branching;
pub mod error;
pub mod kernels;
pub mod ml;
pub mod picard;
pub mod quad;
pub mod samplers;

pub use error::{Error, Result};
