//! Constructive alignment achieving `d_H(X, T(Y)) ≤ 5D/8` for a correspondence
//! of distortion `D`.
//!
//! The case analysis yields explicit translations (on top of the standardizing
//! map, and after a flip about the midpoint of `x'` and `x` when a wide double
//! crossing is present). Several of those formulas are pinned down only up to
//! the choice of extreme points, so they are treated as candidates: all of them
//! are evaluated, on the configuration and on its mirror image, and the best is
//! kept. If none meets the bound, the exact `d_{H,iso}` optimum is used instead.

use crate::correspondence::{distortion, Correspondence};
use crate::error::{Error, Result};
use crate::hausdorff::{dh_iso, hausdorff_under};
use crate::isometry::Isometry1D;
use crate::point_set::PointSet1D;

use super::cases::{case_quantities, classify, double_crossings, is_near_wide_boundary, CaseKind, CrossingSide};
use super::standard::{standardize, StandardConfig};
use super::{AlignCase, AlignOptions, AlignmentReport, CandidateEval};

struct Candidate {
    rule: &'static str,
    flip: bool,
    delta: f64,
}

pub fn align_5_8(x: &PointSet1D, y: &PointSet1D, c: &Correspondence) -> Result<AlignmentReport> {
    align_5_8_with(x, y, c, &AlignOptions::default())
}

pub fn align_5_8_with(
    x: &PointSet1D,
    y: &PointSet1D,
    c: &Correspondence,
    opts: &AlignOptions,
) -> Result<AlignmentReport> {
    let d = distortion(c, x, y)?.value;
    let bound = 0.625 * d;
    let sc = standardize(x, y, c)?;
    let kind = classify(&sc);

    let mut log = Vec::new();
    let mut best: Option<(f64, Isometry1D)> = None;
    let mut consider = |sc: &StandardConfig, cand: &Candidate, mirrored: bool| {
        let in_frame = if cand.flip {
            Isometry1D::translation(cand.delta).after(&Isometry1D::reflection_about(sc.flip_center()))
        } else {
            Isometry1D::translation(cand.delta)
        };
        let t = sc.to_original(&in_frame);
        let value = hausdorff_under(x, y, &t);
        log.push(CandidateEval {
            rule: cand.rule,
            flip: cand.flip,
            delta: cand.delta,
            mirrored,
            value,
        });
        if best.map_or(true, |(v, _)| value < v) {
            best = Some((value, t));
        }
    };

    if kind == CaseKind::Trivial {
        consider(
            &sc,
            &Candidate {
                rule: "overlay",
                flip: false,
                delta: 0.0,
            },
            false,
        );
    } else {
        let ambiguous = double_crossings(&sc)
            .iter()
            .any(|e| is_near_wide_boundary(&sc, e, opts.tol));
        for (frame, mirrored) in [(sc.clone(), false), (sc.mirrored(), true)] {
            for cand in candidates(&frame, kind) {
                consider(&frame, &cand, mirrored);
                if ambiguous {
                    let other = Candidate {
                        flip: !cand.flip,
                        ..cand
                    };
                    consider(&frame, &other, mirrored);
                }
            }
        }
    }

    let (mut achieved, mut isometry) = best.expect("at least one candidate is always generated");
    let mut used_fallback = false;
    if achieved > bound + opts.tol {
        let iso = dh_iso(x, y);
        used_fallback = true;
        achieved = iso.value;
        isometry = iso.isometry;
        if achieved > bound + opts.tol {
            return Err(Error::BoundViolation { achieved, bound });
        }
    }

    Ok(AlignmentReport {
        isometry,
        achieved,
        bound,
        distortion: d,
        case: AlignCase::FiveEighths(kind),
        used_fallback,
        candidate_log: log,
    })
}

/// Candidate translations, in the frame of `sc`, for its case.
fn candidates(sc: &StandardConfig, kind: CaseKind) -> Vec<Candidate> {
    let q = case_quantities(sc);
    let d = sc.distortion;
    let mut out = Vec::new();
    let mut push = |rule, flip, delta: f64| {
        if delta.is_finite() {
            out.push(Candidate { rule, flip, delta });
        }
    };

    match kind {
        CaseKind::Trivial => push("overlay", false, 0.0),
        CaseKind::NoDoubleCrossing => {
            push("no-cross: identity", false, 0.0);
            if let Some(eps) = q.eps {
                push("no-cross A: 3/4 eps", false, 0.75 * eps);
            }
            if let Some(eta) = q.eta {
                push("no-cross B: 3/4 eta", false, 0.75 * eta);
            }
            if let (Some(eps), Some(eta)) = (q.eps, q.eta) {
                push("no-cross A+B: 3/4 max(eps, eta)", false, 0.75 * eps.max(eta));
            }
        }
        CaseKind::WideCrossing => {
            let eta = q.wide_eta.unwrap_or(0.0);
            push("wide: flip", true, 0.0);
            if let Some(eps) = q.eps {
                push("wide A: 3/4 max(eps, eta)", true, 0.75 * eps.max(eta));
            }
            // Gaps of the extreme partnered points beyond y and y' and the
            // partner offsets; the far side comes from the mirrored frame.
            let far = case_quantities(&sc.mirrored());
            let eta1 = eta;
            if let Some(eta2_prime) = far.wide_eta_prime {
                push(
                    "wide no-A, h > 3D/8: eta1 - eta2' - D/8",
                    true,
                    eta1 - eta2_prime - d / 8.0,
                );
            }
            push("wide no-A, h <= 3D/8: D/8 - eta1", true, d / 8.0 - eta1);
        }
        CaseKind::DoubleNotWide => {
            push("double: identity", false, 0.0);
            let left_up_gaps: Vec<f64> = q
                .crossings
                .iter()
                .filter(|s| s.side == CrossingSide::LeftUp)
                .map(|s| s.eps2)
                .collect();
            let right_down_eps2 = q
                .crossings
                .iter()
                .filter(|s| s.side == CrossingSide::RightDown)
                .map(|s| s.eps2)
                .fold(0.0, f64::max);
            if let Some(eps) = q.eps {
                push("double A: 3/4 eps", false, 0.75 * eps);
                if let Some(eta) = q.eta {
                    push("double A: 3/4 max(eps, eta)", false, 0.75 * eps.max(eta));
                }
                for &eta1 in &left_up_gaps {
                    if eta1 < eps {
                        push("double A+B2: eps - eta1", false, eps - eta1);
                    }
                }
            }
            let eta1 = left_up_gaps.iter().copied().fold(0.0, f64::max);
            push(
                "double no-A: 3/4 max(eta1, eps2)",
                false,
                0.75 * eta1.max(right_down_eps2),
            );
        }
    }
    out
}
