//! Gromov-Hausdorff distance between finite subsets of the line.
//!
//! `d_GH = ½ · min_C Dist(C)` over all correspondences `C`. Every correspondence
//! contains a sub-correspondence `graph(f) ∪ transpose(graph(g))` for some
//! `f: X → Y`, `g: Y → X`, and removing pairs never increases distortion, so
//! searching over function pairs is exact. The search below is a depth-first
//! branch and bound over that space: distortion only grows as pairs are added,
//! so any partial assignment already at or above the incumbent is cut.

use serde::{Deserialize, Serialize};

use crate::correspondence::{distortion, Correspondence};
use crate::error::{Error, Result};
use crate::hausdorff::dh_iso;
use crate::isometry::Isometry1D;
use crate::point_set::PointSet1D;

/// Default per-side size limit for the enumerating methods.
pub const DEFAULT_CAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GhMethod {
    BruteForce,
    MonotoneRestricted,
    NotesDp,
    Approx,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GhResult {
    pub value: f64,
    /// An optimal correspondence, for the methods that produce one.
    pub witness: Option<Correspondence>,
    pub method: GhMethod,
}

/// Interval known to contain `d_GH`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApproxInterval {
    pub lower: f64,
    pub upper: f64,
    pub estimate: f64,
    pub isometry: Isometry1D,
}

fn check_cap(x: &PointSet1D, y: &PointSet1D, cap: usize) -> Result<()> {
    if x.len() > cap || y.len() > cap {
        return Err(Error::InstanceTooLarge {
            n: x.len(),
            m: y.len(),
            cap,
        });
    }
    Ok(())
}

/// Exact `d_GH` by exhaustive search over function pairs, with the default cap.
pub fn gh_bruteforce(x: &PointSet1D, y: &PointSet1D) -> Result<GhResult> {
    gh_bruteforce_capped(x, y, DEFAULT_CAP)
}

pub fn gh_bruteforce_capped(x: &PointSet1D, y: &PointSet1D, cap: usize) -> Result<GhResult> {
    check_cap(x, y, cap)?;
    // A staircase is a valid correspondence; it seeds the incumbent.
    let seed = min_distortion_monotone_capped(x, y, cap)?;
    let mut search = FunctionPairSearch::new(x, y, seed.value);
    search.run();
    let witness = match search.best_pairs {
        Some(pairs) => Correspondence::new(pairs, x.len(), y.len())?,
        None => seed.witness,
    };
    Ok(GhResult {
        value: 0.5 * search.best,
        witness: Some(witness),
        method: GhMethod::BruteForce,
    })
}

/// Branch and bound over `(f, g)`: slots `0..n` choose `f(i)`, slots
/// `n..n+m` choose `g(j)`. Only strict improvements replace the incumbent.
struct FunctionPairSearch<'a> {
    xs: &'a [f64],
    ys: &'a [f64],
    edges: Vec<(usize, usize)>,
    best: f64,
    best_pairs: Option<Vec<(usize, usize)>>,
}

impl<'a> FunctionPairSearch<'a> {
    fn new(x: &'a PointSet1D, y: &'a PointSet1D, incumbent: f64) -> Self {
        Self {
            xs: x.as_slice(),
            ys: y.as_slice(),
            edges: Vec::with_capacity(x.len() + y.len()),
            best: incumbent,
            best_pairs: None,
        }
    }

    fn run(&mut self) {
        self.descend(0, 0.0);
    }

    fn added_distortion(&self, i: usize, j: usize) -> f64 {
        let (a, b) = (self.xs[i], self.ys[j]);
        self.edges
            .iter()
            .map(|&(p, q)| ((a - self.xs[p]).abs() - (b - self.ys[q]).abs()).abs())
            .fold(0.0, f64::max)
    }

    fn descend(&mut self, slot: usize, current: f64) {
        let n = self.xs.len();
        let m = self.ys.len();
        if slot == n + m {
            if current < self.best {
                self.best = current;
                self.best_pairs = Some(self.edges.clone());
            }
            return;
        }
        let choices = if slot < n { m } else { n };
        for c in 0..choices {
            let (i, j) = if slot < n { (slot, c) } else { (c, slot - n) };
            if self.edges.contains(&(i, j)) {
                self.descend(slot + 1, current);
                continue;
            }
            let d = current.max(self.added_distortion(i, j));
            if d >= self.best {
                continue;
            }
            self.edges.push((i, j));
            self.descend(slot + 1, d);
            self.edges.pop();
        }
    }
}

/// Minimum-distortion staircase correspondence in one orientation or the other.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotoneResult {
    /// Distortion (not halved).
    pub value: f64,
    /// Indices into the original, unreflected `Y`.
    pub witness: Correspondence,
    /// Whether the optimum was found against the reflected `Y`.
    pub reflected: bool,
}

/// Minimum distortion over crossing-free correspondences of `X` with `Y` and
/// with `−Y`.
///
/// A crossing-free correspondence covering both sides is exactly a lattice
/// path from `(0, 0)` to `(n−1, m−1)` using steps that advance `i`, `j`, or both.
pub fn min_distortion_monotone(x: &PointSet1D, y: &PointSet1D) -> Result<MonotoneResult> {
    min_distortion_monotone_capped(x, y, DEFAULT_CAP)
}

pub fn min_distortion_monotone_capped(x: &PointSet1D, y: &PointSet1D, cap: usize) -> Result<MonotoneResult> {
    check_cap(x, y, cap)?;
    let (direct_value, direct_path) = best_staircase(x.as_slice(), y.as_slice());
    let reflected = y.reflected();
    let (flip_value, flip_path) = best_staircase(x.as_slice(), reflected.as_slice());
    let m = y.len();
    let (value, pairs, reflected) = if flip_value < direct_value {
        let pairs: Vec<_> = flip_path.into_iter().map(|(i, j)| (i, m - 1 - j)).collect();
        (flip_value, pairs, true)
    } else {
        (direct_value, direct_path, false)
    };
    Ok(MonotoneResult {
        value,
        witness: Correspondence::new(pairs, x.len(), m)?,
        reflected,
    })
}

fn best_staircase(xs: &[f64], ys: &[f64]) -> (f64, Vec<(usize, usize)>) {
    struct Walk<'a> {
        xs: &'a [f64],
        ys: &'a [f64],
        path: Vec<(usize, usize)>,
        best: f64,
        best_path: Vec<(usize, usize)>,
    }

    impl Walk<'_> {
        fn step(&mut self, i: usize, j: usize, current: f64) {
            let (a, b) = (self.xs[i], self.ys[j]);
            let added = self
                .path
                .iter()
                .map(|&(p, q)| ((a - self.xs[p]).abs() - (b - self.ys[q]).abs()).abs())
                .fold(0.0, f64::max);
            let d = current.max(added);
            if d >= self.best {
                return;
            }
            self.path.push((i, j));
            let (n, m) = (self.xs.len(), self.ys.len());
            if i + 1 == n && j + 1 == m {
                self.best = d;
                self.best_path = self.path.clone();
            } else {
                if i + 1 < n && j + 1 < m {
                    self.step(i + 1, j + 1, d);
                }
                if i + 1 < n {
                    self.step(i + 1, j, d);
                }
                if j + 1 < m {
                    self.step(i, j + 1, d);
                }
            }
            self.path.pop();
        }
    }

    let mut walk = Walk {
        xs,
        ys,
        path: Vec::new(),
        best: f64::INFINITY,
        best_path: Vec::new(),
    };
    walk.step(0, 0, 0.0);
    (walk.best, walk.best_path)
}

/// Experimental dynamic program over sorted prefixes.
///
/// `D[i][j] = min_{i' ≤ i} max(D[i'][j−1], A[i] − A[i'])`, where the cost of
/// matching the single point `B[j]` to the run `A[i'..=i]` is taken to be the
/// width of that run. Runs on `Y` and on the reflected `Y` and returns half the
/// smaller table corner. No exactness is claimed for it: it is reported next
/// to the exact value, never substituted for it.
pub fn gh_dp_notes(x: &PointSet1D, y: &PointSet1D) -> f64 {
    let k1 = notes_table(x.as_slice(), y.as_slice());
    let k2 = notes_table(x.as_slice(), y.reflected().as_slice());
    0.5 * k1.min(k2)
}

fn notes_table(a: &[f64], b: &[f64]) -> f64 {
    let (n, m) = (a.len(), b.len());
    let mut prev: Vec<f64> = (0..n).map(|i| a[i] - a[0]).collect();
    for j in 1..m {
        let mut cur = vec![0.0; n];
        cur[0] = b[j] - b[0];
        for i in 1..n {
            cur[i] = (0..=i)
                .map(|ip| prev[ip].max(a[i] - a[ip]))
                .fold(f64::INFINITY, f64::min);
        }
        prev = cur;
    }
    prev[n - 1]
}

/// `[0.8·d_{H,iso}, d_{H,iso}]`, which contains `d_GH`.
pub fn gh_approx(x: &PointSet1D, y: &PointSet1D) -> ApproxInterval {
    let iso = dh_iso(x, y);
    ApproxInterval {
        lower: 0.8 * iso.value,
        upper: iso.value,
        estimate: iso.value,
        isometry: iso.isometry,
    }
}

/// Dispatches on `method`.
pub fn gh(x: &PointSet1D, y: &PointSet1D, method: GhMethod, cap: usize) -> Result<GhResult> {
    match method {
        GhMethod::BruteForce => gh_bruteforce_capped(x, y, cap),
        GhMethod::MonotoneRestricted => {
            let r = min_distortion_monotone_capped(x, y, cap)?;
            Ok(GhResult {
                value: 0.5 * r.value,
                witness: Some(r.witness),
                method,
            })
        }
        GhMethod::NotesDp => Ok(GhResult {
            value: gh_dp_notes(x, y),
            witness: None,
            method,
        }),
        GhMethod::Approx => Ok(GhResult {
            value: gh_approx(x, y).estimate,
            witness: None,
            method,
        }),
    }
}

/// Recomputes `½ · Dist(witness)`; a consistency check for enumerated results.
pub fn witness_value(result: &GhResult, x: &PointSet1D, y: &PointSet1D) -> Option<Result<f64>> {
    result
        .witness
        .as_ref()
        .map(|c| distortion(c, x, y).map(|d| 0.5 * d.value))
}
