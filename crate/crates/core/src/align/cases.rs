//! Crossing classification of a standard configuration and the quantities the
//! case analysis is phrased in.

use serde::{Deserialize, Serialize};

use crate::correspondence::{crossing, Edge};

use super::standard::StandardConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseKind {
    /// `D = 0`.
    Trivial,
    NoDoubleCrossing,
    WideCrossing,
    DoubleNotWide,
}

/// Which way a double-crossing edge runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CrossingSide {
    /// `p > x`, `q < y'`.
    RightDown,
    /// `p < x'`, `q > y`.
    LeftUp,
}

/// Side of a double-crossing edge, or `None` if it is not one.
pub fn double_crossing_side(sc: &StandardConfig, e: &Edge) -> Option<CrossingSide> {
    if sc.is_trivial() || !crossing(e, &sc.designated_prime) || !crossing(e, &sc.designated) {
        return None;
    }
    if e.x > sc.x() {
        Some(CrossingSide::RightDown)
    } else {
        Some(CrossingSide::LeftUp)
    }
}

/// Edges crossing both designated edges.
pub fn double_crossings(sc: &StandardConfig) -> Vec<Edge> {
    sc.edges()
        .into_iter()
        .filter(|e| double_crossing_side(sc, e).is_some())
        .collect()
}

/// An endpoint outside the open interval `(x' − D, x + D)`.
pub fn is_wide(sc: &StandardConfig, e: &Edge) -> bool {
    let (lo, hi) = wide_window(sc);
    !(lo < e.x && e.x < hi) || !(lo < e.y && e.y < hi)
}

fn wide_window(sc: &StandardConfig) -> (f64, f64) {
    (sc.x_prime() - sc.distortion, sc.x() + sc.distortion)
}

/// Whether an endpoint of `e` lies within `tol` of the wideness boundary.
pub fn is_near_wide_boundary(sc: &StandardConfig, e: &Edge, tol: f64) -> bool {
    let (lo, hi) = wide_window(sc);
    [e.x, e.y]
        .iter()
        .any(|&t| (t - lo).abs() <= tol || (t - hi).abs() <= tol)
}

/// Wideness is only tested on double-crossing edges.
pub fn classify(sc: &StandardConfig) -> CaseKind {
    if sc.is_trivial() {
        return CaseKind::Trivial;
    }
    let doubles = double_crossings(sc);
    if doubles.is_empty() {
        CaseKind::NoDoubleCrossing
    } else if doubles.iter().any(|e| is_wide(sc, e)) {
        CaseKind::WideCrossing
    } else {
        CaseKind::DoubleNotWide
    }
}

/// Per-edge quantities of a double crossing, measured on the edge's own side.
///
/// For a right-down edge `ε₁ = p − x`, `ε₂ = y' − q`; a left-up edge is
/// measured in the mirrored frame, which gives `ε₁ = x' − p`, `ε₂ = q − y`.
/// `q̃` is `q` reflected about the midpoint of `x'` and `x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrossingStats {
    pub edge: Edge,
    pub side: CrossingSide,
    pub eps1: f64,
    pub eps2: f64,
    pub q_reflected: f64,
}

pub fn crossing_stats(sc: &StandardConfig, e: &Edge) -> Option<CrossingStats> {
    let side = double_crossing_side(sc, e)?;
    let (eps1, eps2) = match side {
        CrossingSide::RightDown => (e.x - sc.x(), sc.y_prime() - e.y),
        CrossingSide::LeftUp => (sc.x_prime() - e.x, e.y - sc.y()),
    };
    Some(CrossingStats {
        edge: *e,
        side,
        eps1,
        eps2,
        q_reflected: sc.x() + sc.x_prime() - e.y,
    })
}

/// The sets and extreme points the case analysis refers to, on the right-hand
/// side of the configuration. The left-hand counterparts are the same
/// quantities of [`StandardConfig::mirrored`], except for `a_prime` and
/// `b_prime` which are reported here directly.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct CaseQuantities {
    /// `{p ∈ X ∩ (x + D, ∞) | some partner q ∈ [y', y]}`
    pub a: Vec<f64>,
    /// `{p ∈ X ∩ (−∞, x' − D) | some partner q ∈ [y', y]}`
    pub a_prime: Vec<f64>,
    /// `{q ∈ Y ∩ (y', y − D) | some partner p ∈ [x, ∞)}`
    pub b: Vec<f64>,
    /// `{q ∈ Y ∩ (y' + D, y) | some partner p ∈ (−∞, x']}`
    pub b_prime: Vec<f64>,

    /// `max A`
    pub p0: Option<f64>,
    /// Partner of `p0` in `[y', y]` closest to `y`.
    pub q0: Option<f64>,
    /// `p0 − x − D`
    pub eps: Option<f64>,
    /// `y − q0`
    pub eps_prime: Option<f64>,

    /// `min B`
    pub q1: Option<f64>,
    /// Smallest partner of `q1` in `[x, ∞)`.
    pub p1: Option<f64>,
    /// `y − D − q1`
    pub eta: Option<f64>,
    /// `p1 − x`
    pub eta_prime: Option<f64>,

    /// `max {q ∈ Y ∩ [y, ∞) | some partner p ∈ [x, ∞)}`; never empty since
    /// `(x, y)` itself qualifies.
    pub wide_q1: Option<f64>,
    /// Smallest partner of `wide_q1` in `[x, ∞)`.
    pub wide_p1: Option<f64>,
    /// `wide_q1 − y`
    pub wide_eta: Option<f64>,
    /// `wide_p1 − x`
    pub wide_eta_prime: Option<f64>,

    pub crossings: Vec<CrossingStats>,
}

pub fn case_quantities(sc: &StandardConfig) -> CaseQuantities {
    let mut out = CaseQuantities::default();
    if sc.is_trivial() {
        return out;
    }
    let d = sc.distortion;
    let (xp, x, yp, y) = (sc.x_prime(), sc.x(), sc.y_prime(), sc.y());
    let edges = sc.edges();
    let in_band = |q: f64| yp <= q && q <= y;

    for e in &edges {
        if in_band(e.y) && e.x > x + d {
            out.a.push(e.x);
        }
        if in_band(e.y) && e.x < xp - d {
            out.a_prime.push(e.x);
        }
        if yp < e.y && e.y < y - d && e.x >= x {
            out.b.push(e.y);
        }
        if yp + d < e.y && e.y < y && e.x <= xp {
            out.b_prime.push(e.y);
        }
    }
    for v in [&mut out.a, &mut out.a_prime, &mut out.b, &mut out.b_prime] {
        v.sort_by(f64::total_cmp);
        v.dedup();
    }

    if let Some(&p0) = out.a.last() {
        let q0 = edges
            .iter()
            .filter(|e| e.x == p0 && in_band(e.y))
            .map(|e| e.y)
            .fold(f64::NEG_INFINITY, f64::max);
        out.p0 = Some(p0);
        out.q0 = Some(q0);
        out.eps = Some(p0 - x - d);
        out.eps_prime = Some(y - q0);
    }

    if let Some(&q1) = out.b.first() {
        let p1 = edges
            .iter()
            .filter(|e| e.y == q1 && e.x >= x)
            .map(|e| e.x)
            .fold(f64::INFINITY, f64::min);
        out.q1 = Some(q1);
        out.p1 = Some(p1);
        out.eta = Some(y - d - q1);
        out.eta_prime = Some(p1 - x);
    }

    let wide_q1 = edges
        .iter()
        .filter(|e| e.y >= y && e.x >= x)
        .map(|e| e.y)
        .fold(f64::NEG_INFINITY, f64::max);
    if wide_q1.is_finite() {
        let wide_p1 = edges
            .iter()
            .filter(|e| e.y == wide_q1 && e.x >= x)
            .map(|e| e.x)
            .fold(f64::INFINITY, f64::min);
        out.wide_q1 = Some(wide_q1);
        out.wide_p1 = Some(wide_p1);
        out.wide_eta = Some(wide_q1 - y);
        out.wide_eta_prime = Some(wide_p1 - x);
    }

    out.crossings = edges.iter().filter_map(|e| crossing_stats(sc, e)).collect();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::align::standard::standardize;
    use crate::correspondence::Correspondence;
    use crate::point_set::{make_point_set, PointSet1D};

    fn ps(v: &[f64]) -> PointSet1D {
        make_point_set(v).unwrap()
    }

    /// Designated (0, −2), (1, 3) with D = 4 and h = 1, plus one extra edge.
    fn lemma_fixture(p: f64, q: f64) -> StandardConfig {
        let x = ps(&[0.0, 1.0, p]);
        let y = ps(&[q, -2.0, 3.0]);
        let c = Correspondence::new([(0, 1), (1, 2), (2, 0)], 3, 3).unwrap();
        let sc = standardize(&x, &y, &c).unwrap();
        assert_eq!(sc.distortion, 4.0);
        assert_eq!(sc.standardizing, crate::Isometry1D::IDENTITY);
        sc
    }

    #[test]
    fn no_crossing_example() {
        let c = Correspondence::identity(2);
        let sc = standardize(&ps(&[0.0, 1.0]), &ps(&[0.0, 2.0]), &c).unwrap();
        assert_eq!(classify(&sc), CaseKind::NoDoubleCrossing);
        let q = case_quantities(&sc);
        assert!(q.a.is_empty() && q.a_prime.is_empty() && q.b.is_empty() && q.b_prime.is_empty());
    }

    #[test]
    fn double_not_wide_example() {
        let sc = lemma_fixture(3.0, -2.5);
        assert_eq!(double_crossings(&sc).len(), 1);
        assert_eq!(classify(&sc), CaseKind::DoubleNotWide);
    }

    #[test]
    fn wide_example() {
        let sc = lemma_fixture(5.5, -4.0);
        assert_eq!(classify(&sc), CaseKind::WideCrossing);
    }

    #[test]
    fn a_set_example() {
        let x = ps(&[0.0, 1.0, 2.3]);
        let y = ps(&[-0.5, 1.0, 1.5]);
        let c = Correspondence::new([(0, 0), (1, 2), (2, 1)], 3, 3).unwrap();
        let sc = standardize(&x, &y, &c).unwrap();
        assert_eq!(sc.distortion, 1.0);
        let q = case_quantities(&sc);
        assert_eq!(q.a, vec![2.3]);
        assert!((q.eps.unwrap() - 0.3).abs() < 1e-12);
        assert_eq!(q.q0, Some(1.0));
        assert_eq!(q.eps_prime, Some(0.5));
    }

    #[test]
    fn crossing_stats_example() {
        let sc = lemma_fixture(3.0, -2.5);
        let q = case_quantities(&sc);
        assert_eq!(q.crossings.len(), 1);
        let s = q.crossings[0];
        assert_eq!(s.side, CrossingSide::RightDown);
        assert_eq!((s.eps1, s.eps2, s.q_reflected), (2.0, 0.5, 3.5));
    }

    #[test]
    fn left_up_is_mirror_of_right_down() {
        let sc = lemma_fixture(3.0, -2.5);
        let m = sc.mirrored();
        let s = case_quantities(&m).crossings[0];
        assert_eq!(s.side, CrossingSide::LeftUp);
        assert_eq!((s.eps1, s.eps2), (2.0, 0.5));
    }
}
