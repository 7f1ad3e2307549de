//! Homological Euler characteristics of `GL_m(ℤ)`, `SL_m(ℤ)` and the congruence
//! subgroups `Γ₁(m,p)` with coefficients in highest-weight representations,
//! computed exactly as sums over torsion conjugacy classes.

pub mod characters;
pub mod cli;
pub mod error;
pub mod eulerchar;
pub mod exactmath;
pub mod formulas;
pub mod torsion;

pub use error::{Error, Result};
pub use exactmath::ExactRational;
