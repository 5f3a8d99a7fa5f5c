//! Correspondences between two point sets and their additive distortion.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isometry::Isometry1D;
use crate::point_set::PointSet1D;

/// A relation between the indices of two sorted point sets that covers both
/// sides.
///
/// Pairs are kept sorted and deduplicated. The sizes of the two sides are part
/// of the value, so a correspondence cannot silently be used with sets it was
/// not built for.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Correspondence {
    pairs: Vec<(usize, usize)>,
    n: usize,
    m: usize,
}

impl Correspondence {
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>, n: usize, m: usize) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = pairs.into_iter().collect();
        pairs.sort_unstable();
        pairs.dedup();
        if let Some(&(i, j)) = pairs.iter().find(|&&(i, j)| i >= n || j >= m) {
            return Err(Error::CoverageViolation(format!(
                "pair ({i}, {j}) is out of range for sets of size {n} and {m}"
            )));
        }
        let mut seen_x = vec![false; n];
        let mut seen_y = vec![false; m];
        for &(i, j) in &pairs {
            seen_x[i] = true;
            seen_y[j] = true;
        }
        if let Some(i) = seen_x.iter().position(|s| !s) {
            return Err(Error::CoverageViolation(format!(
                "index {i} of the first set has no partner"
            )));
        }
        if let Some(j) = seen_y.iter().position(|s| !s) {
            return Err(Error::CoverageViolation(format!(
                "index {j} of the second set has no partner"
            )));
        }
        Ok(Self { pairs, n, m })
    }

    /// `{(i, i)}`; both sides must have the same size.
    pub fn identity(n: usize) -> Self {
        Self {
            pairs: (0..n).map(|i| (i, i)).collect(),
            n,
            m: n,
        }
    }

    /// Every pair `X × Y`.
    pub fn complete(n: usize, m: usize) -> Self {
        Self {
            pairs: (0..n).flat_map(|i| (0..m).map(move |j| (i, j))).collect(),
            n,
            m,
        }
    }

    /// `graph(f) ∪ transpose(graph(g))` for `f: X → Y`, `g: Y → X`.
    pub fn from_functions(f: &[usize], g: &[usize]) -> Result<Self> {
        let pairs = f
            .iter()
            .enumerate()
            .map(|(i, &j)| (i, j))
            .chain(g.iter().enumerate().map(|(j, &i)| (i, j)));
        Self::new(pairs, f.len(), g.len())
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Sizes `(|X|, |Y|)` this correspondence was built for.
    pub fn shape(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn transpose(&self) -> Correspondence {
        let mut pairs: Vec<_> = self.pairs.iter().map(|&(i, j)| (j, i)).collect();
        pairs.sort_unstable();
        Correspondence {
            pairs,
            n: self.m,
            m: self.n,
        }
    }

    /// Re-indexes after the second set was mapped through `t` and re-sorted.
    pub fn reindex_second(&self, t: &Isometry1D) -> Correspondence {
        let mut pairs: Vec<_> = self.pairs.iter().map(|&(i, j)| (i, t.reindex(j, self.m))).collect();
        pairs.sort_unstable();
        Correspondence {
            pairs,
            n: self.n,
            m: self.m,
        }
    }

    /// Re-indexes after both sets were mapped through isometries.
    pub fn reindex_both(&self, tx: &Isometry1D, ty: &Isometry1D) -> Correspondence {
        let mut pairs: Vec<_> = self
            .pairs
            .iter()
            .map(|&(i, j)| (tx.reindex(i, self.n), ty.reindex(j, self.m)))
            .collect();
        pairs.sort_unstable();
        Correspondence {
            pairs,
            n: self.n,
            m: self.m,
        }
    }

    pub fn check_shape(&self, x: &PointSet1D, y: &PointSet1D) -> Result<()> {
        if (x.len(), y.len()) != (self.n, self.m) {
            return Err(Error::CoverageViolation(format!(
                "correspondence built for sizes {}x{} used with sets of sizes {}x{}",
                self.n,
                self.m,
                x.len(),
                y.len()
            )));
        }
        Ok(())
    }

    /// Coordinates of every pair.
    pub fn edges(&self, x: &PointSet1D, y: &PointSet1D) -> Vec<Edge> {
        self.pairs.iter().map(|&(i, j)| Edge::new(i, j, x[i], y[j])).collect()
    }
}

impl<'de> Deserialize<'de> for Correspondence {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            pairs: Vec<(usize, usize)>,
            n: usize,
            m: usize,
        }
        let raw = Raw::deserialize(d)?;
        Correspondence::new(raw.pairs, raw.n, raw.m).map_err(serde::de::Error::custom)
    }
}

/// One pair of a correspondence, carried with its coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub x: f64,
    pub y: f64,
}

impl Edge {
    pub fn new(i: usize, j: usize, x: f64, y: f64) -> Self {
        Self { i, j, x, y }
    }

    /// Change in within-set distances between two edges.
    pub fn distortion_with(&self, other: &Edge) -> f64 {
        ((self.x - other.x).abs() - (self.y - other.y).abs()).abs()
    }

    pub fn crosses(&self, other: &Edge) -> bool {
        crossing(self, other)
    }
}

/// Strict crossing of two edges drawn between two parallel copies of the line.
/// Edges sharing an endpoint never cross.
pub fn crossing(e1: &Edge, e2: &Edge) -> bool {
    (e1.x < e2.x && e1.y > e2.y) || (e1.x > e2.x && e1.y < e2.y)
}

/// Distortion value together with the pair of edges attaining it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Distortion {
    pub value: f64,
    /// Positions in [`Correspondence::pairs`] of an arg-max pair; the
    /// lexicographically smallest one.
    pub attained_by: (usize, usize),
}

/// `max | |x1 − x2| − |y1 − y2| |` over all pairs of pairs of `c`.
pub fn distortion(c: &Correspondence, x: &PointSet1D, y: &PointSet1D) -> Result<Distortion> {
    c.check_shape(x, y)?;
    let edges = c.edges(x, y);
    let mut best = Distortion {
        value: 0.0,
        attained_by: (0, 0),
    };
    for (a, ea) in edges.iter().enumerate() {
        for (b, eb) in edges.iter().enumerate().skip(a + 1) {
            let d = ea.distortion_with(eb);
            if d > best.value {
                best = Distortion {
                    value: d,
                    attained_by: (a, b),
                };
            }
        }
    }
    Ok(best)
}
