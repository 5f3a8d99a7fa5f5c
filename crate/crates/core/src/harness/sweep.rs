//! Randomized verification of the distance inequalities and aligner bounds.
//!
//! Trial `i` uses seed `master ^ i`, so rows are reproducible one by one and
//! the sweep can run in parallel without changing its output.

use std::io::Write;
use std::path::Path;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::align::{align_5_8_with, standardize, tally_lemmas, weak_align_2_with, AlignOptions, LemmaTally};
use crate::correspondence::{distortion, Correspondence};
use crate::error::{Error, Result};
use crate::gh::{gh_bruteforce_capped, gh_dp_notes, min_distortion_monotone_capped, DEFAULT_CAP};
use crate::hausdorff::{dh_iso, hausdorff};
use crate::point_set::PointSet1D;

use super::io::{fmt12, Instance};
use super::random::{random_correspondence, random_instance, rng_for, InstanceKind};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub trials: usize,
    pub n_max: usize,
    pub m_max: usize,
    pub seed: u64,
    pub kind: InstanceKind,
    /// Random correspondences checked per trial, besides the optimal one.
    pub random_corrs: usize,
    pub tol: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            trials: 100,
            n_max: 5,
            m_max: 5,
            seed: 42,
            kind: InstanceKind::Uniform,
            random_corrs: 5,
            tol: crate::DEFAULT_TOL,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub trial_id: usize,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub d_h: f64,
    pub d_hiso: f64,
    pub flip_used: bool,
    pub d_gh_brute: f64,
    /// Minimum staircase distortion (not halved).
    pub dist_monotone: f64,
    pub dp_value: f64,
    /// `dp_value − d_gh_brute`, signed.
    pub dp_gap: f64,
    /// `d_hiso / d_gh_brute`; absent when `d_gh_brute = 0`.
    pub ratio: Option<f64>,
    pub align58_achieved: f64,
    pub align58_bound: f64,
    pub align58_fallback: bool,
    pub weak_achieved: f64,
    pub corrs_checked: usize,
    pub align_violations: usize,
    pub fallbacks: usize,
    pub double_crossings: usize,
    pub wide_checks: usize,
    pub lemma_violations: usize,
    pub sandwich_ok: bool,
}

impl SweepRow {
    pub fn hard_failure(&self) -> bool {
        !self.sandwich_ok || self.align_violations > 0 || self.lemma_violations > 0
    }

    /// `dist_monotone / 2` equals `d_gh_brute` up to `tol`.
    pub fn monotone_matches(&self, tol: f64) -> bool {
        (0.5 * self.dist_monotone - self.d_gh_brute).abs() <= tol
    }
}

pub const CSV_HEADER: [&str; 23] = [
    "trial_id",
    "seed",
    "n",
    "m",
    "d_h",
    "d_hiso",
    "flip_used",
    "d_gh_brute",
    "dist_monotone",
    "dp_value",
    "dp_gap",
    "ratio",
    "align58_achieved",
    "align58_bound",
    "align58_fallback",
    "weak_achieved",
    "corrs_checked",
    "align_violations",
    "fallbacks",
    "double_crossings",
    "wide_checks",
    "lemma_violations",
    "sandwich_ok",
];

fn csv_record(r: &SweepRow) -> Vec<String> {
    vec![
        r.trial_id.to_string(),
        r.seed.to_string(),
        r.n.to_string(),
        r.m.to_string(),
        fmt12(r.d_h),
        fmt12(r.d_hiso),
        r.flip_used.to_string(),
        fmt12(r.d_gh_brute),
        fmt12(r.dist_monotone),
        fmt12(r.dp_value),
        fmt12(r.dp_gap),
        r.ratio.map(fmt12).unwrap_or_default(),
        fmt12(r.align58_achieved),
        fmt12(r.align58_bound),
        r.align58_fallback.to_string(),
        fmt12(r.weak_achieved),
        r.corrs_checked.to_string(),
        r.align_violations.to_string(),
        r.fallbacks.to_string(),
        r.double_crossings.to_string(),
        r.wide_checks.to_string(),
        r.lemma_violations.to_string(),
        r.sandwich_ok.to_string(),
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub config_seed: u64,
    pub rows: Vec<SweepRow>,
}

/// Aggregate counts over a report.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct SweepSummary {
    pub trials: usize,
    pub hard_failures: usize,
    pub sandwich_violations: usize,
    pub align_violations: usize,
    pub lemma_violations: usize,
    pub corrs_checked: usize,
    pub fallbacks: usize,
    pub double_crossings: usize,
    pub wide_checks: usize,
    pub monotone_equal: usize,
    pub dp_below: usize,
    pub dp_equal: usize,
    pub dp_above: usize,
    pub max_ratio: f64,
}

impl SweepReport {
    pub fn summary(&self, tol: f64) -> SweepSummary {
        let mut s = SweepSummary {
            trials: self.rows.len(),
            ..Default::default()
        };
        for r in &self.rows {
            s.hard_failures += r.hard_failure() as usize;
            s.sandwich_violations += !r.sandwich_ok as usize;
            s.align_violations += r.align_violations;
            s.lemma_violations += r.lemma_violations;
            s.corrs_checked += r.corrs_checked;
            s.fallbacks += r.fallbacks;
            s.double_crossings += r.double_crossings;
            s.wide_checks += r.wide_checks;
            s.monotone_equal += r.monotone_matches(tol) as usize;
            if r.dp_gap < -tol {
                s.dp_below += 1;
            } else if r.dp_gap > tol {
                s.dp_above += 1;
            } else {
                s.dp_equal += 1;
            }
            if let Some(q) = r.ratio {
                s.max_ratio = s.max_ratio.max(q);
            }
        }
        s
    }

    pub fn has_hard_failure(&self) -> bool {
        self.rows.iter().any(SweepRow::hard_failure)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_HEADER)?;
        for r in &self.rows {
            w.write_record(csv_record(r))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_csv_file(&self, path: &Path) -> Result<()> {
        let file = std::fs::File::create(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        self.write_csv(std::io::BufWriter::new(file))
    }
}

pub fn trial_seed(master: u64, index: usize) -> u64 {
    master ^ index as u64
}

/// The instance trial `index` runs on. Sizes are drawn uniformly from
/// `1..=n_max` and `1..=m_max`.
pub fn trial_instance(cfg: &SweepConfig, index: usize) -> Instance {
    let seed = trial_seed(cfg.seed, index);
    let mut rng = rng_for(seed.rotate_left(32) ^ 0x5eed);
    let n = rng.random_range(1..=cfg.n_max);
    let m = rng.random_range(1..=cfg.m_max);
    random_instance(n, m, seed, cfg.kind).with_meta("trial", index)
}

/// Seed of the `r`-th random correspondence of a trial.
pub fn corr_seed(trial_seed: u64, r: usize) -> u64 {
    trial_seed
        .wrapping_mul(0x9e37_79b9_7f4a_7c15)
        .wrapping_add(r as u64 + 1)
}

/// Outcome of both aligners and the lemma checks on one correspondence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrCheck {
    pub distortion: f64,
    pub five_eighths: f64,
    pub five_eighths_ok: bool,
    pub fallback: bool,
    pub weak: f64,
    pub weak_ok: bool,
    pub lemmas: LemmaTally,
}

pub fn check_correspondence(x: &PointSet1D, y: &PointSet1D, c: &Correspondence, tol: f64) -> Result<CorrCheck> {
    let d = distortion(c, x, y)?.value;
    let opts = AlignOptions { tol };
    let (five_eighths, five_eighths_ok, fallback) = match align_5_8_with(x, y, c, &opts) {
        Ok(r) => (r.achieved, r.achieved <= 0.625 * d + tol, r.used_fallback),
        Err(Error::BoundViolation { achieved, .. }) => (achieved, false, true),
        Err(e) => return Err(e),
    };
    let (weak, weak_ok) = match weak_align_2_with(x, y, c, &opts) {
        Ok(r) => (r.achieved, r.achieved <= d + tol),
        Err(Error::BoundViolation { achieved, .. }) => (achieved, false),
        Err(e) => return Err(e),
    };
    let lemmas = tally_lemmas(&standardize(x, y, c)?, tol);
    Ok(CorrCheck {
        distortion: d,
        five_eighths,
        five_eighths_ok,
        fallback,
        weak,
        weak_ok,
        lemmas,
    })
}

pub fn run_trial(cfg: &SweepConfig, index: usize) -> Result<SweepRow> {
    let seed = trial_seed(cfg.seed, index);
    let (x, y) = trial_instance(cfg, index).sets()?;
    let tol = cfg.tol;
    let cap = cfg.n_max.max(cfg.m_max).max(DEFAULT_CAP);

    let d_h = hausdorff(&x, &y);
    let iso = dh_iso(&x, &y);
    let brute = gh_bruteforce_capped(&x, &y, cap)?;
    let monotone = min_distortion_monotone_capped(&x, &y, cap)?;
    let dp_value = gh_dp_notes(&x, &y);
    let d_gh = brute.value;

    let witness = brute.witness.clone().expect("brute force returns a witness");
    let best = check_correspondence(&x, &y, &witness, tol)?;
    let mut checks = vec![best];
    for r in 0..cfg.random_corrs {
        let c = random_correspondence(x.len(), y.len(), corr_seed(seed, r), 0.15);
        checks.push(check_correspondence(&x, &y, &c, tol)?);
    }
    let mut lemmas = LemmaTally::default();
    for c in &checks {
        lemmas.merge(&c.lemmas);
    }

    Ok(SweepRow {
        trial_id: index,
        seed,
        n: x.len(),
        m: y.len(),
        d_h,
        d_hiso: iso.value,
        flip_used: iso.isometry.flip,
        d_gh_brute: d_gh,
        dist_monotone: monotone.value,
        dp_value,
        dp_gap: dp_value - d_gh,
        ratio: (d_gh > 0.0).then(|| iso.value / d_gh),
        align58_achieved: best.five_eighths,
        align58_bound: 0.625 * best.distortion,
        align58_fallback: best.fallback,
        weak_achieved: best.weak,
        corrs_checked: checks.len(),
        align_violations: checks
            .iter()
            .map(|c| (!c.five_eighths_ok) as usize + (!c.weak_ok) as usize)
            .sum(),
        fallbacks: checks.iter().filter(|c| c.fallback).count(),
        double_crossings: lemmas.double_crossings_checked,
        wide_checks: lemmas.wide_instances_checked,
        lemma_violations: lemmas.violations(),
        sandwich_ok: d_gh <= iso.value + tol && iso.value <= 1.25 * d_gh + tol,
    })
}

/// Runs every trial (in parallel) and returns rows ordered by trial id.
pub fn verify_sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    if cfg.n_max == 0 || cfg.m_max == 0 {
        return Err(Error::InvalidParameter("set sizes must be positive".into()));
    }
    if cfg.n_max > DEFAULT_CAP || cfg.m_max > DEFAULT_CAP {
        return Err(Error::InstanceTooLarge {
            n: cfg.n_max,
            m: cfg.m_max,
            cap: DEFAULT_CAP,
        });
    }
    let rows = (0..cfg.trials)
        .into_par_iter()
        .map(|i| run_trial(cfg, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        config_seed: cfg.seed,
        rows,
    })
}
