//! A family of instances where the ratio `d_{H,iso} / d_GH` approaches `5/4`.
//!
//! With `x` at the origin, `D = 2δ` and `ε = 1/(4(2k+1))`:
//!
//! ```text
//! x' = −h        y' = −h − δ
//! x  = 0         y  = δ
//! x_i = 2δ + 4(2k − i + 1)εδ     y_i = 4iεδ     (i = 0..k)
//! ```
//!
//! paired as `(x', y')`, `(x, y)` and `(x_i, y_i)`. The far pair keeps every
//! flipped placement at least `3δ/2` away, while the best translation lands
//! on one of `k + 1` equally good shifts with value `(5/4 − ε)δ`.

use serde::{Deserialize, Serialize};

use crate::correspondence::{distortion, Correspondence};
use crate::error::{Error, Result};
use crate::hausdorff::hausdorff_at;
use crate::point_set::PointSet1D;

/// Smallest allowed `h / δ`.
pub const MIN_SEPARATION: f64 = 50.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TightInstance {
    pub k: usize,
    pub eps: f64,
    pub delta: f64,
    pub h: f64,
    pub x: PointSet1D,
    pub y: PointSet1D,
    pub corr: Correspondence,
    pub expected_gh: f64,
    pub expected_dhiso: f64,
    pub expected_dist: f64,
    /// Distortion of `corr`, computed.
    pub distortion: f64,
}

impl TightInstance {
    /// The shifts `3δ/4 + εδ + 4iεδ`, `i = 0..=k`, where the translation
    /// minimum is attained.
    pub fn attaining_shifts(&self) -> Vec<f64> {
        let step = 4.0 * self.eps * self.delta;
        (0..=self.k)
            .map(|i| 0.75 * self.delta + self.eps * self.delta + step * i as f64)
            .collect()
    }
}

pub fn eps_for(k: usize) -> f64 {
    1.0 / (4.0 * (2 * k + 1) as f64)
}

/// Builds the instance for `k ≥ 1`, `delta > 0` and separation `h` (default
/// `50·delta`).
pub fn generate(k: usize, delta: f64, h: Option<f64>) -> Result<TightInstance> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if !(delta.is_finite() && delta > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "delta must be positive and finite, got {delta}"
        )));
    }
    let required = MIN_SEPARATION * delta;
    let h = h.unwrap_or(required);
    if !h.is_finite() || h < required {
        return Err(Error::SeparationTooSmall { h, required });
    }

    let eps = eps_for(k);
    let mut xs = vec![-h, 0.0];
    let mut ys = vec![-h - delta, delta];
    for i in 0..=k {
        xs.push(2.0 * delta + 4.0 * (2 * k - i + 1) as f64 * eps * delta);
        ys.push(4.0 * i as f64 * eps * delta);
    }
    let x = PointSet1D::new(xs)?;
    let y = PointSet1D::new(ys)?;
    debug_assert_eq!((x.len(), y.len()), (k + 3, k + 3));

    // Sorted X is x', x, x_k, …, x_0; sorted Y is y', y_0, …, y_k, y.
    let mut pairs = vec![(0, 0), (1, k + 2)];
    pairs.extend((0..=k).map(|i| (2 + k - i, 1 + i)));
    let corr = Correspondence::new(pairs, k + 3, k + 3)?;
    let dist = distortion(&corr, &x, &y)?.value;

    Ok(TightInstance {
        k,
        eps,
        delta,
        h,
        x,
        y,
        corr,
        expected_gh: delta,
        expected_dhiso: (1.25 - eps) * delta,
        expected_dist: 2.0 * delta,
        distortion: dist,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RowKind {
    Attaining,
    Midpoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub delta: f64,
    pub value: f64,
    pub kind: RowKind,
}

/// `d_H(X, Y + Δ)` at each attaining shift and at the midpoints between
/// consecutive ones, in increasing `Δ`.
pub fn profile_table(k: usize, delta: f64) -> Result<Vec<TableRow>> {
    let inst = generate(k, delta, None)?;
    let shifts = inst.attaining_shifts();
    let mut rows = Vec::with_capacity(2 * shifts.len());
    for (i, &s) in shifts.iter().enumerate() {
        if i > 0 {
            let mid = 0.5 * (shifts[i - 1] + s);
            rows.push(TableRow {
                delta: mid,
                value: hausdorff_at(&inst.x, &inst.y, mid),
                kind: RowKind::Midpoint,
            });
        }
        rows.push(TableRow {
            delta: s,
            value: hausdorff_at(&inst.x, &inst.y, s),
            kind: RowKind::Attaining,
        });
    }
    Ok(rows)
}
