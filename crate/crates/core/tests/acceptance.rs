//! End-to-end acceptance run. Each criterion prints one `PASS`/`FAIL` line;
//! the process exits nonzero if any criterion fails. Criterion 8 is a report
//! and always passes.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use gh1d::harness::{
    random_instance, trial_instance, verify_sweep, write_json, InstanceKind, SweepConfig, SweepReport,
};
use gh1d::hausdorff::translation_breakpoints;
use gh1d::tight::{eps_for, generate, profile_table, RowKind};
use gh1d::{dh_iso, gh_bruteforce, hausdorff, hausdorff_at, min_hausdorff_translation};

const TOL: f64 = 1e-9;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn check(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

/// `max_a min_b |a − b|` by the definition, both ways.
fn hausdorff_oracle(x: &[f64], y: &[f64]) -> f64 {
    let directed = |a: &[f64], b: &[f64]| {
        a.iter()
            .map(|&p| b.iter().map(|&q| (p - q).abs()).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    directed(x, y).max(directed(y, x))
}

fn sandwich(sweep: &SweepReport) -> Outcome {
    let s = sweep.summary(TOL);
    Outcome::check(
        s.sandwich_violations == 0,
        format!(
            "{} instances, {} sandwich violations, max d_hiso/d_gh = {:.6}",
            s.trials, s.sandwich_violations, s.max_ratio
        ),
    )
}

fn tightness() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for k in 1..=4 {
        for delta in [1.0, 0.1, 10.0] {
            let t = generate(k, delta, None).expect("valid parameters");
            let want = (1.25 - eps_for(k)) * delta;
            let got = dh_iso(&t.x, &t.y).value;
            checked += 1;
            if (got - want).abs() > TOL * delta.max(1.0) || (t.distortion - 2.0 * delta).abs() > TOL * delta.max(1.0) {
                failures.push(format!("k={k} delta={delta}: dh_iso {got} vs {want}"));
            }
            if k <= 2 {
                let gh = gh_bruteforce(&t.x, &t.y).expect("within cap").value;
                checked += 1;
                if (gh - delta).abs() > TOL * delta.max(1.0) {
                    failures.push(format!("k={k} delta={delta}: d_GH {gh} vs {delta}"));
                }
            }
        }
    }
    let unit: Vec<String> = (1..=4)
        .map(|k| {
            let t = generate(k, 1.0, None).unwrap();
            format!("{:.7}", dh_iso(&t.x, &t.y).value)
        })
        .collect();
    Outcome::check(
        failures.is_empty(),
        format!(
            "{checked} checks, dh_iso at delta=1: [{}]{}",
            unit.join(", "),
            if failures.is_empty() {
                String::new()
            } else {
                format!("; {}", failures.join("; "))
            }
        ),
    )
}

fn table_profile() -> Outcome {
    let mut failures = Vec::new();
    let mut min_excess = f64::INFINITY;
    for k in [1, 2] {
        let want = 1.25 - eps_for(k);
        for row in profile_table(k, 1.0).unwrap() {
            match row.kind {
                RowKind::Attaining if (row.value - want).abs() > TOL => {
                    failures.push(format!("k={k} delta={}: {} vs {want}", row.delta, row.value))
                }
                RowKind::Midpoint => {
                    min_excess = min_excess.min(row.value - want);
                    if row.value - want < 1e-6 {
                        failures.push(format!("k={k} midpoint {}: excess {}", row.delta, row.value - want));
                    }
                }
                _ => {}
            }
        }
    }
    Outcome::check(
        failures.is_empty(),
        if failures.is_empty() {
            format!("k in {{1, 2}}, smallest midpoint excess {min_excess:.6}")
        } else {
            format!("smallest midpoint excess {min_excess:.6}; {}", failures.join("; "))
        },
    )
}

fn aligner(sweep: &SweepReport) -> Outcome {
    let s = sweep.summary(TOL);
    let resolved = s.corrs_checked - s.fallbacks;
    Outcome::check(
        s.align_violations == 0,
        format!(
            "{} instances, {} correspondences, {} bound violations, {:.4} resolved without fallback",
            s.trials,
            s.corrs_checked,
            s.align_violations,
            resolved as f64 / s.corrs_checked as f64
        ),
    )
}

fn lemmas(sweep: &SweepReport) -> Outcome {
    let s = sweep.summary(TOL);
    Outcome::check(
        s.lemma_violations == 0,
        format!(
            "{} double crossings and {} wide-lemma instances checked, {} violations",
            s.double_crossings, s.wide_checks, s.lemma_violations
        ),
    )
}

fn translation_exactness() -> Outcome {
    let step: f64 = 1e-4;
    let mut worst_gap: f64 = 0.0;
    let mut above_grid = 0;
    let mut far_from_grid = 0;
    for seed in 0..1000u64 {
        let size = 1 + (seed as usize % 6);
        let inst = random_instance(
            size,
            1 + (seed as usize / 7) % 6,
            0xacce55 ^ seed,
            InstanceKind::Uniform,
        );
        let (x, y) = inst.sets().unwrap();
        let exact = min_hausdorff_translation(&x, &y);
        let s = translation_breakpoints(&x, &y);
        let lo = s[0] - 1.0;
        let steps = ((s[s.len() - 1] + 1.0 - lo) / step).ceil() as i64;
        let mut grid_min = f64::INFINITY;
        for i in 0..=steps {
            let v = hausdorff_at(&x, &y, lo + i as f64 * step);
            if exact.value > v {
                above_grid += 1;
            }
            grid_min = grid_min.min(v);
        }
        let gap = grid_min - exact.value;
        worst_gap = worst_gap.max(gap);
        if gap > 2e-4 {
            far_from_grid += 1;
        }
    }
    Outcome::check(
        above_grid == 0 && far_from_grid == 0,
        format!(
            "1000 instances, {above_grid} grid points below the exact minimum, {far_from_grid} gaps over 2e-4, worst gap {worst_gap:.3e}"
        ),
    )
}

fn merge_scan_oracle() -> Outcome {
    let mut worst: f64 = 0.0;
    for seed in 0..1000u64 {
        let n = 1 + (seed as usize * 7) % 40;
        let m = 1 + (seed as usize * 13) % 40;
        let kind = match seed % 3 {
            0 => InstanceKind::Uniform,
            1 => InstanceKind::Clustered,
            _ => InstanceKind::Lattice { jitter: 0.3 },
        };
        let inst = random_instance(n, m, 0x5ca1_ab1e ^ seed, kind);
        let (x, y) = inst.sets().unwrap();
        let fast = hausdorff(&x, &y);
        let slow = hausdorff_oracle(x.as_slice(), y.as_slice());
        worst = worst.max((fast - slow).abs());
    }
    Outcome::check(
        worst <= 1e-12,
        format!("1000 instances, max |merge − brute| = {worst:.3e}"),
    )
}

fn notes_report(sweep: &SweepReport, cfg: &SweepConfig) -> Outcome {
    let s = sweep.summary(TOL);
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("monotone_counterexamples");
    let _ = std::fs::remove_dir_all(&dir);
    let mut written = 0;
    for row in sweep.rows.iter().filter(|r| !r.monotone_matches(TOL)) {
        std::fs::create_dir_all(&dir).expect("create artifact dir");
        let inst = trial_instance(cfg, row.trial_id)
            .with_meta("d_gh_brute", row.d_gh_brute)
            .with_meta("dist_monotone", row.dist_monotone);
        write_json(&dir.join(format!("trial_{}.json", row.trial_id)), &inst).expect("write counterexample");
        written += 1;
    }
    let gaps: Vec<f64> = sweep.rows.iter().map(|r| r.dp_gap).collect();
    let min_gap = gaps.iter().copied().fold(f64::INFINITY, f64::min);
    let max_gap = gaps.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mean_gap = gaps.iter().sum::<f64>() / gaps.len() as f64;
    Outcome::check(
        true,
        format!(
            "monotone/2 = d_GH in {}/{} ({:.4}); {written} counterexamples{}; notes DP gap below/equal/above = {}/{}/{}, min {min_gap:.4}, mean {mean_gap:.4}, max {max_gap:.4}",
            s.monotone_equal,
            s.trials,
            s.monotone_equal as f64 / s.trials as f64,
            if written > 0 { format!(" in {}", dir.display()) } else { String::new() },
            s.dp_below,
            s.dp_equal,
            s.dp_above,
        ),
    )
}

fn main() -> ExitCode {
    let started = Instant::now();
    let mut results: Vec<(u32, &str, Outcome)> = Vec::new();

    let sandwich_cfg = SweepConfig {
        trials: 10_000,
        n_max: 5,
        m_max: 5,
        seed: 42,
        random_corrs: 0,
        ..Default::default()
    };
    let sandwich_sweep = verify_sweep(&sandwich_cfg).expect("sandwich sweep runs");
    results.push((1, "sandwich", sandwich(&sandwich_sweep)));
    results.push((2, "tightness", tightness()));
    results.push((3, "translation profile", table_profile()));

    let align_cfg = SweepConfig {
        trials: 2_000,
        n_max: 5,
        m_max: 5,
        seed: 7,
        random_corrs: 5,
        ..Default::default()
    };
    let align_sweep = verify_sweep(&align_cfg).expect("aligner sweep runs");
    results.push((4, "constructive aligner", aligner(&align_sweep)));
    results.push((5, "lemma suite", lemmas(&align_sweep)));
    results.push((6, "translation exactness", translation_exactness()));
    results.push((7, "merge-scan oracle", merge_scan_oracle()));
    results.push((8, "notes report", notes_report(&sandwich_sweep, &sandwich_cfg)));

    let mut failed = 0;
    for (id, name, out) in &results {
        let tag = if out.pass { "PASS" } else { "FAIL" };
        println!("criterion {id} [{tag}] {name}: {}", out.detail);
        failed += !out.pass as usize;
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.1}s",
        results.len() - failed,
        started.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
