//! Identity registry and verification engine.
//!
//! Each registered identity is checked over a parameter range, either by
//! comparing full coefficient vectors in `Q[x]` (symbolic mode) or by
//! evaluating both sides at a fixed set of rational points (points mode).
//! [`oracle_direct`] recomputes left-hand sides term by term with no cache
//! and no shortcuts.

mod engine;
mod oracle;
mod registry;
mod report;

pub use engine::{
    sample_points, sample_y, verify_all, verify_identity, verify_identity_mapped, Mode, RangeSpec,
};
pub use oracle::oracle_direct;
pub use registry::{lookup, registry, IdentityEntry, ModeSupport, Parity};
pub use report::{Counterexample, Report};
