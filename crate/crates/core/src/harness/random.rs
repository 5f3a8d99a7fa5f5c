//! Seeded instance and correspondence generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::correspondence::Correspondence;

use super::io::Instance;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum InstanceKind {
    /// i.i.d. on `[0, 1]`.
    Uniform,
    /// Each point falls in `[0, 0.2]` or `[0.8, 1]` with equal probability.
    Clustered,
    /// The grid `i / (n − 1)` with each point moved by up to `jitter / 2`
    /// grid spacings.
    Lattice { jitter: f64 },
}

impl InstanceKind {
    pub fn name(&self) -> &'static str {
        match self {
            InstanceKind::Uniform => "uniform",
            InstanceKind::Clustered => "clustered",
            InstanceKind::Lattice { .. } => "lattice",
        }
    }
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn draw(rng: &mut ChaCha8Rng, count: usize, kind: InstanceKind) -> Vec<f64> {
    let mut v: Vec<f64> = match kind {
        InstanceKind::Uniform => (0..count).map(|_| rng.random_range(0.0..=1.0)).collect(),
        InstanceKind::Clustered => (0..count)
            .map(|_| {
                let base = if rng.random_bool(0.5) { 0.0 } else { 0.8 };
                base + rng.random_range(0.0..=0.2)
            })
            .collect(),
        InstanceKind::Lattice { jitter } => {
            let spacing = if count > 1 { 1.0 / (count - 1) as f64 } else { 1.0 };
            (0..count)
                .map(|i| {
                    let offset = if jitter > 0.0 {
                        rng.random_range(-0.5..=0.5) * jitter * spacing
                    } else {
                        0.0
                    };
                    i as f64 * spacing + offset
                })
                .collect()
        }
    };
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

/// Deterministic in `(n, m, seed, kind)`. Coincident draws are merged, so the
/// sets may come out smaller than requested.
pub fn random_instance(n: usize, m: usize, seed: u64, kind: InstanceKind) -> Instance {
    assert!(n >= 1 && m >= 1, "set sizes must be positive");
    let mut rng = rng_for(seed);
    let x = draw(&mut rng, n, kind);
    let y = draw(&mut rng, m, kind);
    Instance::new(x, y)
        .with_meta("generator", kind.name())
        .with_meta("seed", seed)
}

/// A random correspondence: random functions both ways, plus each remaining
/// pair with probability `extra`.
pub fn random_correspondence(n: usize, m: usize, seed: u64, extra: f64) -> Correspondence {
    let mut rng = rng_for(seed);
    let f: Vec<usize> = (0..n).map(|_| rng.random_range(0..m)).collect();
    let g: Vec<usize> = (0..m).map(|_| rng.random_range(0..n)).collect();
    let mut pairs: Vec<(usize, usize)> = f.iter().enumerate().map(|(i, &j)| (i, j)).collect();
    pairs.extend(g.iter().enumerate().map(|(j, &i)| (i, j)));
    for i in 0..n {
        for j in 0..m {
            if rng.random_bool(extra.clamp(0.0, 1.0)) {
                pairs.push((i, j));
            }
        }
    }
    pairs.shuffle(&mut rng);
    Correspondence::new(pairs, n, m).expect("functions in both directions cover both sides")
}
