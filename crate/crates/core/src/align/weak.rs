//! The simpler alignment with guarantee `d_H(X, T(Y)) ≤ D`.
//!
//! Pin the leftmost point `x_L` of `X` to its partner `y₁`, flipping first if
//! the edges at `x_L` and at `x_R = max X` would cross. Edges crossing
//! `(x_L, y₁)` reach at most `ε₁` to the right on `X` and `ε₂` to the left on
//! `Y`; if either exceeds `D`, shift right by `D`.

use serde::{Deserialize, Serialize};

use crate::correspondence::{distortion, Correspondence};
use crate::error::{Error, Result};
use crate::hausdorff::{dh_iso, hausdorff_under};
use crate::isometry::Isometry1D;
use crate::point_set::PointSet1D;

use super::{AlignCase, AlignOptions, AlignmentReport, CandidateEval};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeakCase {
    Trivial,
    NoCrossing,
    NarrowCrossing,
    WideCrossing,
}

pub fn weak_align_2(x: &PointSet1D, y: &PointSet1D, c: &Correspondence) -> Result<AlignmentReport> {
    weak_align_2_with(x, y, c, &AlignOptions::default())
}

pub fn weak_align_2_with(
    x: &PointSet1D,
    y: &PointSet1D,
    c: &Correspondence,
    opts: &AlignOptions,
) -> Result<AlignmentReport> {
    let d = distortion(c, x, y)?.value;
    let partner = |i: usize| {
        c.pairs()
            .iter()
            .find(|&&(p, _)| p == i)
            .map(|&(_, j)| y[j])
            .expect("coverage guarantees a partner")
    };
    let x_left = x.min();
    let y1 = partner(0);
    let y2 = partner(x.len() - 1);
    let flip = y1 > y2;
    let sigma = if flip { -1.0 } else { 1.0 };
    let pinned = Isometry1D::new(flip, x_left - sigma * y1);

    let mut eps1: Option<f64> = None;
    let mut eps2: Option<f64> = None;
    for e in c.edges(x, y) {
        let q = pinned.apply(e.y);
        if e.x > x_left && q < x_left {
            eps1 = Some(eps1.map_or(e.x - x_left, |v| v.max(e.x - x_left)));
            eps2 = Some(eps2.map_or(x_left - q, |v| v.max(x_left - q)));
        }
    }

    let shifted = pinned.then_translate(d);
    let (case, order) = if d <= 0.0 {
        (WeakCase::Trivial, [("pin", pinned), ("pin + D", shifted)])
    } else {
        match (eps1, eps2) {
            (Some(e1), Some(e2)) if e1 > d || e2 > d => {
                (WeakCase::WideCrossing, [("pin + D", shifted), ("pin", pinned)])
            }
            (Some(_), Some(_)) => (WeakCase::NarrowCrossing, [("pin", pinned), ("pin + D", shifted)]),
            _ => (WeakCase::NoCrossing, [("pin", pinned), ("pin + D", shifted)]),
        }
    };

    let bound = d;
    let mut log = Vec::new();
    let mut chosen = None;
    for (rule, t) in order {
        let value = hausdorff_under(x, y, &t);
        log.push(CandidateEval {
            rule,
            flip,
            delta: t.delta,
            mirrored: false,
            value,
        });
        if value <= bound + opts.tol {
            chosen = Some((value, t));
            break;
        }
    }

    let (achieved, isometry, used_fallback) = match chosen {
        Some((v, t)) => (v, t, false),
        None => {
            let iso = dh_iso(x, y);
            if iso.value > bound + opts.tol {
                return Err(Error::BoundViolation {
                    achieved: iso.value,
                    bound,
                });
            }
            (iso.value, iso.isometry, true)
        }
    };

    Ok(AlignmentReport {
        isometry,
        achieved,
        bound,
        distortion: d,
        case: AlignCase::Weak(case),
        used_fallback,
        candidate_log: log,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point_set::make_point_set;

    fn ps(v: &[f64]) -> PointSet1D {
        make_point_set(v).unwrap()
    }

    #[test]
    fn no_crossing_example() {
        let r = weak_align_2(&ps(&[0.0, 1.0]), &ps(&[0.0, 2.0]), &Correspondence::identity(2)).unwrap();
        assert_eq!(r.case, AlignCase::Weak(WeakCase::NoCrossing));
        assert_eq!(r.achieved, 1.0);
        assert_eq!(r.bound, 1.0);
        assert_eq!(r.isometry, Isometry1D::IDENTITY);
    }

    #[test]
    fn identity_example() {
        let x = ps(&[0.0, 0.5, 4.0]);
        let r = weak_align_2(&x, &x, &Correspondence::identity(3)).unwrap();
        assert_eq!(r.achieved, 0.0);
        assert_eq!(r.case, AlignCase::Weak(WeakCase::Trivial));
    }

    #[test]
    fn singleton_against_pair() {
        let r = weak_align_2(&ps(&[0.0]), &ps(&[0.0, 10.0]), &Correspondence::complete(1, 2)).unwrap();
        assert_eq!(r.bound, 10.0);
        assert_eq!(r.achieved, 10.0);
        assert!(!r.used_fallback);
        assert_eq!(r.candidate_log.len(), 1);
    }

    #[test]
    fn flips_when_extreme_edges_cross() {
        let x = ps(&[0.0, 1.0, 3.0]);
        let y = ps(&[0.0, 2.0, 3.0]);
        let c = Correspondence::new([(0, 2), (1, 1), (2, 0)], 3, 3).unwrap();
        let r = weak_align_2(&x, &y, &c).unwrap();
        assert!(r.isometry.is_flip());
        assert_eq!(r.achieved, 0.0);
    }
}
