//! Verdict lines and pinned tolerances for the `acceptance` test target.

use std::fmt;
use std::time::Duration;

/// Largest admissible |entry| of the 76×76 system.
pub const DET76_MAX_ENTRY: i64 = 2;
/// |det| of the 76×76 system is `2^DET76_LOG2`.
pub const DET76_LOG2: u32 = 36;
pub const DET76_BUDGET: Duration = Duration::from_secs(10);

pub const STEINBERG_SAMPLES: usize = 100;
/// Draws over which each R2 constant must be the same integer.
pub const R2_DRAWS: usize = 20;
pub const STEINBERG_RINGS: [&str; 4] = ["zmod:5^2", "zloc:5", "fp:7", "dual:5"];
pub const STEINBERG_BUDGET: Duration = Duration::from_secs(60);

pub const LEMMA2_UNITS: usize = 100;
pub const LEMMA2_BUDGET: Duration = Duration::from_secs(60);

pub const SPLIT_PAIRS: u64 = 50;

/// Conditions of the G2 sanity list that cannot be read unambiguously.
pub const G2_UNPARSEABLE: &[&str] = &["Con16"];

/// One acceptance criterion's outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub id: u8,
    pub pass: bool,
    pub summary: String,
}

impl Verdict {
    pub fn new(id: u8, pass: bool, summary: impl Into<String>) -> Verdict {
        Verdict { id, pass, summary: summary.into() }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "criterion {}: {} — {}", self.id, if self.pass { "PASS" } else { "FAIL" }, self.summary)
    }
}
