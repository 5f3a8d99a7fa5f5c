//! Constructive alignments: from a correspondence of distortion `D`, an
//! isometry `T` with `d_H(X, T(Y)) ≤ 5D/8` (or `≤ D` for the simpler
//! construction). Also exposes the standard configuration, the crossing
//! classification and the checks of the supporting lemmas.

mod cases;
mod five_eighths;
mod lemmas;
mod standard;
mod weak;

use serde::{Deserialize, Serialize};

use crate::isometry::Isometry1D;

pub use cases::{
    case_quantities, classify, crossing_stats, double_crossing_side, double_crossings, is_wide, CaseKind,
    CaseQuantities, CrossingSide, CrossingStats,
};
pub use five_eighths::{align_5_8, align_5_8_with};
pub use lemmas::{
    check_double_crossing_lemma, check_wide_crossing_lemma, tally_lemmas, DoubleCrossingCheck, LemmaTally,
    WideCrossingCheck,
};
pub use standard::{standardize, StandardConfig};
pub use weak::{weak_align_2, weak_align_2_with, WeakCase};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlignOptions {
    /// Absolute slack on every bound comparison.
    pub tol: f64,
}

impl Default for AlignOptions {
    fn default() -> Self {
        Self {
            tol: crate::DEFAULT_TOL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlignCase {
    FiveEighths(CaseKind),
    Weak(WeakCase),
}

/// One evaluated candidate. `delta` is in the frame of the (possibly
/// mirrored) standard configuration, or absolute for the weak aligner.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CandidateEval {
    pub rule: &'static str,
    pub flip: bool,
    pub delta: f64,
    pub mirrored: bool,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlignmentReport {
    /// Maps the second input onto the frame of the first.
    pub isometry: Isometry1D,
    /// `d_H(X, T(Y))`.
    pub achieved: f64,
    pub bound: f64,
    pub distortion: f64,
    pub case: AlignCase,
    pub used_fallback: bool,
    pub candidate_log: Vec<CandidateEval>,
}

impl AlignmentReport {
    /// The candidate that produced the result, if no fallback was needed.
    pub fn winning_rule(&self) -> Option<&'static str> {
        if self.used_fallback {
            return None;
        }
        self.candidate_log
            .iter()
            .find(|c| c.value == self.achieved)
            .map(|c| c.rule)
    }
}
