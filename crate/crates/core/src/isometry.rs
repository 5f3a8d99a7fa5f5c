use std::fmt;

use serde::{Deserialize, Serialize};

/// An isometry of the line, `t ↦ σ·t + Δ` with `σ ∈ {+1, −1}`.
///
/// Reflections are always taken about the origin; a reflection about any other
/// center is that reflection followed by a translation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Isometry1D {
    pub flip: bool,
    pub delta: f64,
}

impl Isometry1D {
    pub const IDENTITY: Isometry1D = Isometry1D {
        flip: false,
        delta: 0.0,
    };

    pub fn new(flip: bool, delta: f64) -> Self {
        Self { flip, delta }
    }

    pub fn translation(delta: f64) -> Self {
        Self { flip: false, delta }
    }

    /// `t ↦ −t`.
    pub fn reflection() -> Self {
        Self { flip: true, delta: 0.0 }
    }

    /// `t ↦ 2c − t`.
    pub fn reflection_about(center: f64) -> Self {
        Self {
            flip: true,
            delta: 2.0 * center,
        }
    }

    pub fn sigma(&self) -> f64 {
        if self.flip {
            -1.0
        } else {
            1.0
        }
    }

    pub fn is_flip(&self) -> bool {
        self.flip
    }

    pub fn apply(&self, t: f64) -> f64 {
        self.sigma() * t + self.delta
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn after(&self, inner: &Isometry1D) -> Isometry1D {
        Isometry1D {
            flip: self.flip != inner.flip,
            delta: self.sigma() * inner.delta + self.delta,
        }
    }

    pub fn then_translate(&self, delta: f64) -> Isometry1D {
        Isometry1D::translation(delta).after(self)
    }

    pub fn inverse(&self) -> Isometry1D {
        Isometry1D {
            flip: self.flip,
            delta: -self.sigma() * self.delta,
        }
    }

    /// Where index `j` of a sorted set of `len` points lands after this map.
    pub fn reindex(&self, j: usize, len: usize) -> usize {
        if self.flip {
            len - 1 - j
        } else {
            j
        }
    }
}

impl Default for Isometry1D {
    fn default() -> Self {
        Self::IDENTITY
    }
}

impl fmt::Display for Isometry1D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.flip { "-t" } else { "t" };
        write!(f, "{s} + {}", self.delta)
    }
}
