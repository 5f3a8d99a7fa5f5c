//! Wall-clock scaling report used by the `bench` command.

use std::time::Instant;

use serde::Serialize;

use crate::hausdorff::{hausdorff, hausdorff_at, min_hausdorff_translation, translation_candidate_count};
use crate::point_set::PointSet1D;

use super::random::{random_instance, InstanceKind};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BenchRow {
    pub size: usize,
    /// Mean seconds per `hausdorff` call.
    pub hausdorff_secs: f64,
    /// Number of midpoints the exact translation search may evaluate.
    pub candidates: u128,
    /// Seconds for the full pruned translation search, if it was run.
    pub translation_secs: Option<f64>,
    /// Mean seconds per single-shift evaluation.
    pub per_candidate_secs: f64,
}

fn mean_secs(reps: usize, mut f: impl FnMut()) -> f64 {
    let start = Instant::now();
    for _ in 0..reps {
        f();
    }
    start.elapsed().as_secs_f64() / reps as f64
}

/// Times `hausdorff` and the translation search on uniform instances of each
/// size. The full search runs only while `size ≤ full_limit`.
pub fn bench_report(sizes: &[usize], seed: u64, full_limit: usize) -> Vec<BenchRow> {
    sizes
        .iter()
        .map(|&size| {
            let inst = random_instance(size, size, seed ^ size as u64, InstanceKind::Uniform);
            let (x, y) = inst.sets().expect("generated sets are valid");
            let reps = (200_000 / size.max(1)).clamp(3, 2_000);
            let hausdorff_secs = mean_secs(reps, || {
                std::hint::black_box(hausdorff(&x, &y));
            });
            let per_candidate_secs = mean_secs(reps, || {
                std::hint::black_box(hausdorff_at(&x, &y, 0.0123));
            });
            let translation_secs = (size <= full_limit).then(|| time_search(&x, &y));
            BenchRow {
                size,
                hausdorff_secs,
                candidates: translation_candidate_count(&x, &y),
                translation_secs,
                per_candidate_secs,
            }
        })
        .collect()
}

fn time_search(x: &PointSet1D, y: &PointSet1D) -> f64 {
    let start = Instant::now();
    std::hint::black_box(min_hausdorff_translation(x, y));
    start.elapsed().as_secs_f64()
}
