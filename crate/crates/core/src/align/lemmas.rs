//! Executable forms of the two structural facts the case analysis rests on.

use serde::{Deserialize, Serialize};

use crate::correspondence::Edge;
use crate::error::{Error, Result};

use super::cases::{crossing_stats, double_crossings, is_wide};
use super::standard::StandardConfig;

/// The four inequalities every double crossing of a distortion-`D`
/// correspondence satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCrossingCheck {
    /// `ε₁ − ε₂ ≥ h`
    pub gap_at_least_h: bool,
    /// `ε₁ − ε₂ ≤ D − h`
    pub gap_at_most_d_minus_h: bool,
    /// `h ≤ D/2`
    pub h_at_most_half: bool,
    /// `|p − q̃| ≤ D/2 − h`
    pub reflected_close: bool,
}

impl DoubleCrossingCheck {
    pub fn all(&self) -> bool {
        self.gap_at_least_h && self.gap_at_most_d_minus_h && self.h_at_most_half && self.reflected_close
    }

    pub fn violations(&self) -> usize {
        [
            self.gap_at_least_h,
            self.gap_at_most_d_minus_h,
            self.h_at_most_half,
            self.reflected_close,
        ]
        .iter()
        .filter(|ok| !**ok)
        .count()
    }
}

/// Evaluates the four inequalities for `e`, each with slack `tol`.
pub fn check_double_crossing_lemma(sc: &StandardConfig, e: &Edge, tol: f64) -> Result<DoubleCrossingCheck> {
    let stats = crossing_stats(sc, e).ok_or(Error::NotApplicable { p: e.x, q: e.y })?;
    let (d, h) = (sc.distortion, sc.h);
    let gap = stats.eps1 - stats.eps2;
    Ok(DoubleCrossingCheck {
        gap_at_least_h: gap >= h - tol,
        gap_at_most_d_minus_h: gap <= d - h + tol,
        h_at_most_half: h <= 0.5 * d + tol,
        reflected_close: (e.x - stats.q_reflected).abs() <= 0.5 * d - h + tol,
    })
}

/// One instance of the wide-crossing lemma's hypotheses and its conclusion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WideCrossingCheck {
    pub wide_edge: Edge,
    /// The edge `(p0, q0)` with `p0 > x + D` and `y' < q0 < y`.
    pub anchor: Edge,
    /// `y − q0`
    pub eps_prime: f64,
    pub h: f64,
    /// `ε' ≥ h`
    pub holds: bool,
}

/// Checks `ε' ≥ h` for every anchor edge `(p0, q0)` with `p0 > x + D` and
/// `y' < q0 < y`, provided some wide double crossing exists. Returns one
/// record per anchor; empty when the hypotheses are not met.
pub fn check_wide_crossing_lemma(sc: &StandardConfig, tol: f64) -> Vec<WideCrossingCheck> {
    if sc.is_trivial() {
        return Vec::new();
    }
    let Some(wide_edge) = double_crossings(sc).into_iter().find(|e| is_wide(sc, e)) else {
        return Vec::new();
    };
    let (x, y, yp, d) = (sc.x(), sc.y(), sc.y_prime(), sc.distortion);
    sc.edges()
        .into_iter()
        .filter(|e| e.x > x + d && yp < e.y && e.y < y)
        .map(|anchor| {
            let eps_prime = y - anchor.y;
            WideCrossingCheck {
                wide_edge,
                anchor,
                eps_prime,
                h: sc.h,
                holds: eps_prime >= sc.h - tol,
            }
        })
        .collect()
}

/// Outcome of running both lemma checks on a configuration and on its mirror.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct LemmaTally {
    pub double_crossings_checked: usize,
    pub double_crossing_violations: usize,
    pub wide_instances_checked: usize,
    pub wide_violations: usize,
}

impl LemmaTally {
    pub fn violations(&self) -> usize {
        self.double_crossing_violations + self.wide_violations
    }

    pub fn merge(&mut self, other: &LemmaTally) {
        self.double_crossings_checked += other.double_crossings_checked;
        self.double_crossing_violations += other.double_crossing_violations;
        self.wide_instances_checked += other.wide_instances_checked;
        self.wide_violations += other.wide_violations;
    }
}

/// Runs every applicable lemma check on `sc`. Double crossings are checked
/// once (each is measured on its own side); the wide-crossing lemma is
/// checked on both `sc` and its mirror.
pub fn tally_lemmas(sc: &StandardConfig, tol: f64) -> LemmaTally {
    let mut t = LemmaTally::default();
    for e in double_crossings(sc) {
        let check = check_double_crossing_lemma(sc, &e, tol).expect("edge is a double crossing");
        t.double_crossings_checked += 1;
        if !check.all() {
            t.double_crossing_violations += 1;
        }
    }
    for side in [sc.clone(), sc.mirrored()] {
        for w in check_wide_crossing_lemma(&side, tol) {
            t.wide_instances_checked += 1;
            if !w.holds {
                t.wide_violations += 1;
            }
        }
    }
    t
}
