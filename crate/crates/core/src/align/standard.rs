use serde::Serialize;

use crate::correspondence::{distortion, Correspondence, Edge};
use crate::error::Result;
use crate::isometry::Isometry1D;
use crate::point_set::PointSet1D;

/// A correspondence normalized so that its two distortion-attaining edges
/// `(x', y')` and `(x, y)` do not cross and `x' − y' = y − x = D/2`.
///
/// All coordinates (`xs`, `ys`, the designated edges) live in the
/// configuration's own frame. `frame` maps the role-X input into `xs` (the
/// identity unless the configuration was mirrored) and `standardizing` maps
/// the role-Y input into `ys`. When `swapped` is set the roles of the two
/// inputs were exchanged so that `x − x' ≤ |y − y'|` holds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StandardConfig {
    pub xs: PointSet1D,
    pub ys: PointSet1D,
    pub frame: Isometry1D,
    pub standardizing: Isometry1D,
    pub corr: Correspondence,
    /// `(x', y')`
    pub designated_prime: Edge,
    /// `(x, y)`
    pub designated: Edge,
    pub distortion: f64,
    /// `x − x'`
    pub h: f64,
    pub swapped: bool,
}

impl StandardConfig {
    pub fn x_prime(&self) -> f64 {
        self.designated_prime.x
    }

    pub fn x(&self) -> f64 {
        self.designated.x
    }

    pub fn y_prime(&self) -> f64 {
        self.designated_prime.y
    }

    pub fn y(&self) -> f64 {
        self.designated.y
    }

    pub fn is_trivial(&self) -> bool {
        self.distortion <= 0.0
    }

    /// Midpoint of `x'` and `x`, the center of the flips used by the aligner.
    pub fn flip_center(&self) -> f64 {
        0.5 * (self.x_prime() + self.x())
    }

    /// All pairs of the correspondence, in this frame.
    pub fn edges(&self) -> Vec<Edge> {
        self.corr.edges(&self.xs, &self.ys)
    }

    /// Converts a map acting on `ys` (into the `xs` frame) into one taking the
    /// original second input onto the original first input.
    pub fn to_original(&self, in_frame: &Isometry1D) -> Isometry1D {
        let role = self.frame.inverse().after(&in_frame.after(&self.standardizing));
        if self.swapped {
            role.inverse()
        } else {
            role
        }
    }

    /// The same configuration seen through `t ↦ −t`.
    ///
    /// Left and right exchange roles: the new `(x', y')` is `(−x, −y)` and the
    /// new `(x, y)` is `(−x', −y')`, so the standard relations still hold.
    pub fn mirrored(&self) -> StandardConfig {
        let r = Isometry1D::reflection();
        let (n, m) = (self.xs.len(), self.ys.len());
        let flip_edge = |e: &Edge| Edge::new(n - 1 - e.i, m - 1 - e.j, -e.x, -e.y);
        StandardConfig {
            xs: self.xs.reflected(),
            ys: self.ys.reflected(),
            frame: r.after(&self.frame),
            standardizing: r.after(&self.standardizing),
            corr: self.corr.reindex_both(&r, &r),
            designated_prime: flip_edge(&self.designated),
            designated: flip_edge(&self.designated_prime),
            distortion: self.distortion,
            h: self.h,
            swapped: self.swapped,
        }
    }
}

/// Puts `(X, Y, C)` into standard configuration.
///
/// The designated edges are the lexicographically first pair attaining the
/// distortion. If that pair has `|x − x'| > |y − y'|` the inputs swap roles.
/// The second input is flipped if needed so the designated edges do not cross,
/// then translated so that `x' − y' = y − x = D/2`. With `D = 0` the result is
/// the exact overlay.
pub fn standardize(x: &PointSet1D, y: &PointSet1D, c: &Correspondence) -> Result<StandardConfig> {
    let dist = distortion(c, x, y)?;
    let pairs = c.pairs();
    if dist.value <= 0.0 {
        return Ok(overlay(x, y, c));
    }
    let (a, b) = (pairs[dist.attained_by.0], pairs[dist.attained_by.1]);
    let dx = (x[a.0] - x[b.0]).abs();
    let dy = (y[a.1] - y[b.1]).abs();
    if dx > dy {
        let ct = c.transpose();
        Ok(build(y, x, &ct, (a.1, a.0), (b.1, b.0), dist.value, true))
    } else {
        Ok(build(x, y, c, a, b, dist.value, false))
    }
}

fn build(
    x: &PointSet1D,
    y: &PointSet1D,
    c: &Correspondence,
    a: (usize, usize),
    b: (usize, usize),
    d: f64,
    swapped: bool,
) -> StandardConfig {
    let key = |p: (usize, usize)| (x[p.0], y[p.1]);
    let (prime, other) = if key(a).partial_cmp(&key(b)) == Some(std::cmp::Ordering::Greater) {
        (b, a)
    } else {
        (a, b)
    };
    let (xp, yp) = key(prime);
    let (xx, yy) = key(other);
    let flip = yy < yp;
    let sigma = if flip { -1.0 } else { 1.0 };
    let s = Isometry1D::new(flip, xp - 0.5 * d - sigma * yp);
    let m = y.len();
    StandardConfig {
        xs: x.clone(),
        ys: y.transformed(&s),
        frame: Isometry1D::IDENTITY,
        standardizing: s,
        corr: c.reindex_second(&s),
        designated_prime: Edge::new(prime.0, s.reindex(prime.1, m), xp, s.apply(yp)),
        designated: Edge::new(other.0, s.reindex(other.1, m), xx, s.apply(yy)),
        distortion: d,
        h: xx - xp,
        swapped,
    }
}

/// `D = 0`: the correspondence is an isometry of the two sets, realized by a
/// single map. Both designated edges are the first pair.
fn overlay(x: &PointSet1D, y: &PointSet1D, c: &Correspondence) -> StandardConfig {
    let pairs = c.pairs();
    let (i0, j0) = pairs[0];
    let flip = pairs.iter().any(|&(i, j)| (x[i] - x[i0]) * (y[j] - y[j0]) < 0.0);
    let sigma = if flip { -1.0 } else { 1.0 };
    let s = Isometry1D::new(flip, x[i0] - sigma * y[j0]);
    let e = Edge::new(i0, s.reindex(j0, y.len()), x[i0], s.apply(y[j0]));
    StandardConfig {
        xs: x.clone(),
        ys: y.transformed(&s),
        frame: Isometry1D::IDENTITY,
        standardizing: s,
        corr: c.reindex_second(&s),
        designated_prime: e,
        designated: e,
        distortion: 0.0,
        h: 0.0,
        swapped: false,
    }
}
