//! Shared inputs for the criterion benchmarks.

use gh1d::harness::{random_instance, InstanceKind};
use gh1d::PointSet1D;

/// Sizes the scaling benchmarks sweep over.
pub const SIZES: [usize; 3] = [100, 1_000, 10_000];

/// A uniform instance with `size` points per side, fixed by `seed`.
pub fn uniform_pair(size: usize, seed: u64) -> (PointSet1D, PointSet1D) {
    random_instance(size, size, seed, InstanceKind::Uniform)
        .sets()
        .expect("generated coordinates are finite")
}

/// Tiny instances the exponential-time methods can handle.
pub fn small_pairs(count: usize, size: usize, seed: u64) -> Vec<(PointSet1D, PointSet1D)> {
    (0..count as u64).map(|i| uniform_pair(size, seed ^ i)).collect()
}
