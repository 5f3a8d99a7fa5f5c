//! Finite point sets on the real line.

use std::ops::Index;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isometry::Isometry1D;

/// A nonempty, strictly increasing sequence of finite reals.
///
/// Every compact subset of the line handled by this crate is a finite one, so a
/// sorted vector is the whole representation. Indices into the sorted sequence
/// are what [`Correspondence`](crate::Correspondence) stores.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct PointSet1D {
    values: Vec<f64>,
}

impl PointSet1D {
    /// Sorts and deduplicates `values`.
    pub fn new(values: impl Into<Vec<f64>>) -> Result<Self> {
        let mut values = values.into();
        if values.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some((index, &value)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::InvalidCoordinate { index, value });
        }
        values.sort_by(f64::total_cmp);
        // -0.0 and 0.0 compare equal and collapse here
        values.dedup_by(|a, b| a == b);
        Ok(Self { values })
    }

    /// Wraps values already known to be sorted, finite and nonempty.
    pub(crate) fn from_sorted_unchecked(values: Vec<f64>) -> Self {
        debug_assert!(!values.is_empty());
        debug_assert!(values.windows(2).all(|w| w[0] <= w[1]));
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with collections.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    pub fn diameter(&self) -> f64 {
        self.max() - self.min()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        self.values.iter().copied()
    }

    pub fn contains(&self, t: f64) -> bool {
        self.index_of(t).is_some()
    }

    /// Position of the exact value `t`, if present.
    pub fn index_of(&self, t: f64) -> Option<usize> {
        self.values.binary_search_by(|v| v.total_cmp(&t)).ok()
    }

    /// The image `{σ·t + Δ}`, re-sorted.
    ///
    /// A flip reverses the order, so index `j` of `self` becomes index
    /// `len - 1 - j` of the result; see [`Isometry1D::reindex`].
    pub fn transformed(&self, t: &Isometry1D) -> PointSet1D {
        let mut values: Vec<f64> = self.values.iter().map(|&v| t.apply(v)).collect();
        if t.is_flip() {
            values.reverse();
        }
        Self::from_sorted_unchecked(values)
    }

    pub fn translated(&self, delta: f64) -> PointSet1D {
        self.transformed(&Isometry1D::translation(delta))
    }

    pub fn reflected(&self) -> PointSet1D {
        self.transformed(&Isometry1D::reflection())
    }

    pub fn scaled(&self, c: f64) -> Result<PointSet1D> {
        PointSet1D::new(self.values.iter().map(|v| v * c).collect::<Vec<_>>())
    }
}

impl Index<usize> for PointSet1D {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.values[i]
    }
}

impl<'de> Deserialize<'de> for PointSet1D {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let values = Vec::<f64>::deserialize(d)?;
        PointSet1D::new(values).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<Vec<f64>> for PointSet1D {
    type Error = Error;

    fn try_from(values: Vec<f64>) -> Result<Self> {
        PointSet1D::new(values)
    }
}

impl TryFrom<&[f64]> for PointSet1D {
    type Error = Error;

    fn try_from(values: &[f64]) -> Result<Self> {
        PointSet1D::new(values.to_vec())
    }
}

/// Builds a point set from arbitrary input, sorting and deduplicating it.
pub fn make_point_set(values: &[f64]) -> Result<PointSet1D> {
    PointSet1D::new(values.to_vec())
}

/// Applies `t` to every point of `p`.
pub fn apply_isometry(t: &Isometry1D, p: &PointSet1D) -> PointSet1D {
    p.transformed(t)
}
