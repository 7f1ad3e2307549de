//! Closed forms for cusp-form dimensions, the cohomology of `Γ₁(2,p)`, the
//! rank-three parity cases, cohomology profiles and the rank-four and rank-five
//! values, each as printed and evaluated verbatim, together with the audit that
//! sets them against the engine.

mod audit;
mod closed;

pub use audit::{audit, AuditRecord, Inputs, MAX_AUDIT_BOUND};
pub use closed::*;
