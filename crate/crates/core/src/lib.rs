//! Optimal synthesis for the left-invariant sub-Riemannian problem on the
//! Cartan group: exponential map, strata, Maxwell and cut times, comparison
//! with the Engel group, and a shooting solver for the boundary problem.

pub mod cli;
pub mod elliptic;
pub mod engel;
pub mod error;
pub mod expmap;
mod f2v_series;
pub mod maxwell;
pub mod ode;
pub mod pendulum;
pub mod roots;
pub mod shooting;

pub use error::{Error, Result};
