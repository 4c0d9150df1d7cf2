use std::time::Duration;

use crate::lacunary::{Params, Value};
use crate::seqcore::TouchStats;
use crate::Rational;

/// First failing parameter set of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    /// Position in the run's parameter enumeration; merges keep the smallest.
    pub seq: usize,
    pub params: Params,
    pub residual: Value,
    /// Sample point at which the residual was nonzero (points mode only).
    pub point: Option<Rational>,
}

/// Outcome of verifying one identity over a range.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub identity: String,
    pub mode: super::Mode,
    pub n_from: usize,
    pub n_to: usize,
    pub m_max: Option<usize>,
    pub tried: usize,
    pub passed: usize,
    pub failed: usize,
    pub first_counterexample: Option<Counterexample>,
    pub elapsed: Duration,
    pub touches: TouchStats,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    /// Combines two partial runs over disjoint parts of the same
    /// enumeration. Associative; the earliest counterexample wins.
    pub fn merge(mut self, other: Report) -> Report {
        self.tried += other.tried;
        self.passed += other.passed;
        self.failed += other.failed;
        self.n_from = self.n_from.min(other.n_from);
        self.n_to = self.n_to.max(other.n_to);
        self.elapsed += other.elapsed;
        self.touches = self.touches.merge(other.touches);
        self.first_counterexample = match (self.first_counterexample, other.first_counterexample) {
            (Some(a), Some(b)) => Some(if b.seq < a.seq { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }
}
