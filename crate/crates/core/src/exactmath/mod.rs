//! Exact arithmetic: reduced rationals, integer polynomials with Sylvester
//! resultants, and the field ℚ(ζ₁₂) used by the independent oracles.

mod cyc12;
mod det;
mod poly;
mod rational;

pub use cyc12::{resultant_oracle, Cyc12};
pub use det::bareiss_determinant;
pub use poly::{cyclotomic_polynomial, resultant, sylvester_matrix, IntPolynomial};
pub use rational::{ExactRational, ParseRationalError};
