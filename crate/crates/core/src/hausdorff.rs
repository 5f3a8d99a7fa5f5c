//! Hausdorff distance between sorted point sets and its exact minimization
//! over translations and over the full isometry group of the line.
//!
//! For a fixed pair of sets, `f(Δ) = d_H(X, Y + Δ)` is a maximum of functions
//! of the form `Δ ↦ min_j |x_i − y_j − Δ|` (and the symmetric ones), each
//! piecewise linear with slopes ±1. So `f` is piecewise linear with slopes ±1
//! and every local minimum sits where an ascending line `Δ − s` meets a
//! descending line `s' − Δ`, with `s, s'` in `S = {x_i − y_j}`. Evaluating `f`
//! at every midpoint `(s + s') / 2` therefore finds the global minimum exactly.

use serde::{Deserialize, Serialize};

use crate::isometry::Isometry1D;
use crate::point_set::PointSet1D;

/// `max_{x ∈ X} min_{y ∈ Y} |x − y|`, by a single merge scan.
pub fn directed_hausdorff(x: &PointSet1D, y: &PointSet1D) -> f64 {
    directed_hausdorff_shifted(x.as_slice(), y.as_slice(), 0.0)
}

/// Directed distance from `xs` to `ys + shift`; both slices sorted.
fn directed_hausdorff_shifted(xs: &[f64], ys: &[f64], shift: f64) -> f64 {
    let mut worst: f64 = 0.0;
    let mut k = 0;
    for &a in xs {
        while k < ys.len() && ys[k] + shift < a {
            k += 1;
        }
        let mut nearest = f64::INFINITY;
        if k < ys.len() {
            nearest = ys[k] + shift - a;
        }
        if k > 0 {
            nearest = nearest.min(a - (ys[k - 1] + shift));
        }
        worst = worst.max(nearest);
    }
    worst
}

/// Symmetric Hausdorff distance.
pub fn hausdorff(x: &PointSet1D, y: &PointSet1D) -> f64 {
    hausdorff_shifted(x.as_slice(), y.as_slice(), 0.0)
}

/// `d_H(X, Y + shift)` without materializing the shifted set.
fn hausdorff_shifted(xs: &[f64], ys: &[f64], shift: f64) -> f64 {
    directed_hausdorff_shifted(xs, ys, shift).max(directed_hausdorff_shifted_rev(ys, xs, shift))
}

/// Directed distance from `ys + shift` to `xs`.
fn directed_hausdorff_shifted_rev(ys: &[f64], xs: &[f64], shift: f64) -> f64 {
    let mut worst: f64 = 0.0;
    let mut k = 0;
    for &b in ys {
        let b = b + shift;
        while k < xs.len() && xs[k] < b {
            k += 1;
        }
        let mut nearest = f64::INFINITY;
        if k < xs.len() {
            nearest = xs[k] - b;
        }
        if k > 0 {
            nearest = nearest.min(b - xs[k - 1]);
        }
        worst = worst.max(nearest);
    }
    worst
}

/// `d_H(X, Y + Δ)` at one translation.
pub fn hausdorff_at(x: &PointSet1D, y: &PointSet1D, delta: f64) -> f64 {
    hausdorff_shifted(x.as_slice(), y.as_slice(), delta)
}

/// `d_H(X, T(Y))`.
pub fn hausdorff_under(x: &PointSet1D, y: &PointSet1D, t: &Isometry1D) -> f64 {
    if t.is_flip() {
        hausdorff(x, &y.transformed(t))
    } else {
        hausdorff_at(x, y, t.delta)
    }
}

/// Sample of the translation profile `Δ ↦ d_H(X, Y + Δ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TranslationProfilePoint {
    pub delta: f64,
    pub value: f64,
}

/// Evaluates the translation profile at each requested `Δ`, in input order.
pub fn hausdorff_profile(x: &PointSet1D, y: &PointSet1D, deltas: &[f64]) -> Vec<TranslationProfilePoint> {
    deltas
        .iter()
        .map(|&delta| TranslationProfilePoint {
            delta,
            value: hausdorff_at(x, y, delta),
        })
        .collect()
}

/// Minimizer of the translation profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TranslationOptimum {
    pub delta: f64,
    pub value: f64,
}

impl TranslationOptimum {
    /// Lexicographic on `(value, delta)`.
    fn improves_on(&self, other: &TranslationOptimum) -> bool {
        self.value < other.value || (self.value == other.value && self.delta < other.delta)
    }
}

/// Sorted, deduplicated `{x_i − y_j}`: the breakpoints of the translation
/// profile's constituent lines.
pub fn translation_breakpoints(x: &PointSet1D, y: &PointSet1D) -> Vec<f64> {
    let mut s: Vec<f64> = x.iter().flat_map(|a| y.iter().map(move |b| a - b)).collect();
    s.sort_by(f64::total_cmp);
    s.dedup();
    s
}

/// Number of midpoints `(s + s') / 2, s ≤ s'`, i.e. the size of the space any
/// exact translation search has to account for.
pub fn translation_candidate_count(x: &PointSet1D, y: &PointSet1D) -> u128 {
    let k = (x.len() * y.len()) as u128;
    k * (k + 1) / 2
}

/// Exact global minimum of `Δ ↦ d_H(X, Y + Δ)`; ties go to the smallest `Δ`.
///
/// A shift `Δ` has `f(Δ) ≤ r` exactly when every `x_i` and every `y_j` has a
/// partner within `r`, i.e. when `Δ` lies in `⋃_j [s_ij − r, s_ij + r]` for
/// each `i` and in `⋃_i [s_ij − r, s_ij + r]` for each `j`. One sweep over the
/// sorted `s_ij` decides that in `O(|X|·|Y|)`, and bisection on `r` brackets
/// the optimal value `r*`. Every global minimizer is a midpoint `(s + s')/2`
/// with `s' − s = 2r*`, so only pairs whose gap falls in the final bracket are
/// evaluated.
pub fn min_hausdorff_translation(x: &PointSet1D, y: &PointSet1D) -> TranslationOptimum {
    let xs = x.as_slice();
    let ys = y.as_slice();
    let lo_gap = x.min() - y.min();
    let hi_gap = x.max() - y.max();
    let mid = 0.5 * (lo_gap + hi_gap);
    let fallback = TranslationOptimum {
        delta: mid,
        value: hausdorff_shifted(xs, ys, mid),
    };

    let sweep = CoverageSweep::new(xs, ys);
    // f(Δ) ≥ max(|lo_gap − Δ|, |hi_gap − Δ|) ≥ |lo_gap − hi_gap| / 2.
    let mut lo = 0.5 * (lo_gap - hi_gap).abs();
    let mut hi = fallback.value;
    if sweep.feasible(lo) {
        hi = lo;
    } else {
        for _ in 0..200 {
            let m = 0.5 * (lo + hi);
            if m <= lo || m >= hi {
                break;
            }
            if sweep.feasible(m) {
                hi = m;
            } else {
                lo = m;
            }
        }
    }

    let scale = 1.0 + sweep.max_abs + hi;
    let slack = 1e-12 * scale;
    let s = translation_breakpoints(x, y);
    let (gap_lo, gap_hi) = (2.0 * lo - slack, 2.0 * hi + slack);
    let mut best: Option<TranslationOptimum> = None;
    let (mut first, mut last) = (0, 0);
    for (a, &sa) in s.iter().enumerate() {
        first = first.max(a);
        while first < s.len() && s[first] - sa < gap_lo {
            first += 1;
        }
        last = last.max(first);
        while last < s.len() && s[last] - sa <= gap_hi {
            last += 1;
        }
        for &sb in &s[first..last] {
            let delta = 0.5 * (sa + sb);
            let cand = TranslationOptimum {
                delta,
                value: hausdorff_shifted(xs, ys, delta),
            };
            if best.as_ref().map_or(true, |b| cand.improves_on(b)) {
                best = Some(cand);
            }
        }
    }
    match best {
        Some(b) if !fallback.improves_on(&b) => b,
        _ => fallback,
    }
}

/// Sorted centers `s_ij = x_i − y_j` with their owners, for the decision
/// sweep.
struct CoverageSweep {
    centers: Vec<(f64, u32, u32)>,
    n: usize,
    m: usize,
    max_abs: f64,
}

impl CoverageSweep {
    fn new(xs: &[f64], ys: &[f64]) -> Self {
        let mut centers = Vec::with_capacity(xs.len() * ys.len());
        for (i, &a) in xs.iter().enumerate() {
            for (j, &b) in ys.iter().enumerate() {
                centers.push((a - b, i as u32, j as u32));
            }
        }
        centers.sort_unstable_by(|p, q| p.0.total_cmp(&q.0));
        let max_abs = centers.iter().map(|c| c.0.abs()).fold(0.0, f64::max);
        Self {
            centers,
            n: xs.len(),
            m: ys.len(),
            max_abs,
        }
    }

    /// Whether some `Δ` has every point of either set within `r` of a partner.
    fn feasible(&self, r: f64) -> bool {
        let mut active_x = vec![0u32; self.n];
        let mut active_y = vec![0u32; self.m];
        let (mut covered_x, mut covered_y) = (0, 0);
        let c = &self.centers;
        let (mut open, mut close) = (0, 0);
        while open < c.len() {
            // Closed intervals: an opening at the same coordinate as a
            // closing is processed first.
            if c[open].0 - r <= c[close].0 + r {
                let (_, i, j) = c[open];
                active_x[i as usize] += 1;
                covered_x += (active_x[i as usize] == 1) as usize;
                active_y[j as usize] += 1;
                covered_y += (active_y[j as usize] == 1) as usize;
                if covered_x == self.n && covered_y == self.m {
                    return true;
                }
                open += 1;
            } else {
                let (_, i, j) = c[close];
                active_x[i as usize] -= 1;
                covered_x -= (active_x[i as usize] == 0) as usize;
                active_y[j as usize] -= 1;
                covered_y -= (active_y[j as usize] == 0) as usize;
                close += 1;
            }
        }
        false
    }
}

/// Reference search: evaluates every candidate midpoint with no pruning.
/// Quadratic in `|X|·|Y|`; used to cross-check the pruned search.
pub fn min_hausdorff_translation_exhaustive(x: &PointSet1D, y: &PointSet1D) -> TranslationOptimum {
    let s = translation_breakpoints(x, y);
    let mut best: Option<TranslationOptimum> = None;
    for (a, &sa) in s.iter().enumerate() {
        for &sb in &s[a..] {
            let delta = 0.5 * (sa + sb);
            let cand = TranslationOptimum {
                delta,
                value: hausdorff_at(x, y, delta),
            };
            if best.as_ref().map_or(true, |b| cand.improves_on(b)) {
                best = Some(cand);
            }
        }
    }
    best.expect("breakpoint set is nonempty")
}

/// Optimal isometry for `d_{H,iso}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IsoOptimum {
    pub isometry: Isometry1D,
    pub value: f64,
}

/// `min_{σ ∈ {±1}} min_Δ d_H(X, σ·Y + Δ)`; ties prefer `σ = +1`.
pub fn dh_iso(x: &PointSet1D, y: &PointSet1D) -> IsoOptimum {
    let direct = min_hausdorff_translation(x, y);
    let flipped = min_hausdorff_translation(x, &y.reflected());
    if flipped.value < direct.value {
        IsoOptimum {
            isometry: Isometry1D::new(true, flipped.delta),
            value: flipped.value,
        }
    } else {
        IsoOptimum {
            isometry: Isometry1D::translation(direct.delta),
            value: direct.value,
        }
    }
}

/// Translation-only optimum wrapped as an [`IsoOptimum`].
pub fn dh_translation_only(x: &PointSet1D, y: &PointSet1D) -> IsoOptimum {
    let t = min_hausdorff_translation(x, y);
    IsoOptimum {
        isometry: Isometry1D::translation(t.delta),
        value: t.value,
    }
}
