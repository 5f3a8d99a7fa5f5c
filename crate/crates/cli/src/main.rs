mod output;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use gh1d::harness::{
    bench_report, read_correspondence, read_points, verify_sweep, write_json, CorrFile, Instance, InstanceKind,
    SweepConfig,
};
use gh1d::hausdorff::translation_breakpoints;
use gh1d::{
    align_5_8, dh_iso, dh_translation_only, directed_hausdorff, gh, gh_approx, hausdorff, hausdorff_profile,
    weak_align_2, AlignmentReport, GhMethod, PointSet1D, DEFAULT_CAP,
};

use output::Report;

#[derive(Parser)]
#[command(
    name = "gh1d",
    version,
    about = "Hausdorff and Gromov-Hausdorff distances on the real line"
)]
struct Cli {
    /// Print a single JSON object instead of `name value` lines.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hausdorff distance between two point sets.
    Hausdorff {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        /// Only the directed distance from X to Y.
        #[arg(long)]
        directed: bool,
    },
    /// Minimum Hausdorff distance over translations and flips.
    Iso {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        /// Translations only.
        #[arg(long)]
        no_flip: bool,
        /// Write the translation profile of the chosen orientation as CSV.
        #[arg(long, requires = "grid_step")]
        profile: Option<PathBuf>,
        #[arg(long)]
        grid_step: Option<f64>,
    },
    /// Gromov-Hausdorff distance.
    Gh {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Largest set size the enumerating methods accept.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Isometry built from a correspondence, with its guaranteed bound.
    Align {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        corr: PathBuf,
        #[arg(long, value_enum)]
        method: AlignArg,
    },
    /// Write an instance of the family where the 5/4 ratio is approached.
    Tight {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        delta: f64,
        /// Separation of the far pair (default 50 * delta).
        #[arg(long)]
        h: Option<f64>,
        #[arg(long)]
        out: PathBuf,
        /// Also write the canonical correspondence.
        #[arg(long)]
        corr_out: Option<PathBuf>,
    },
    /// Randomized sweep checking the distance inequalities and aligner bounds.
    Verify {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        m_max: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Uniform)]
        kind: KindArg,
        /// Random correspondences per trial, besides an optimal one.
        #[arg(long, default_value_t = 5)]
        random_corrs: usize,
    },
    /// Timing of the distance computations on growing inputs.
    Bench {
        /// Comma-separated sizes.
        #[arg(long, value_delimiter = ',', default_value = "100,1000,10000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest size for which the full translation search is timed.
        #[arg(long, default_value_t = 1000)]
        full_limit: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Monotone,
    Dp,
    Approx,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlignArg {
    FiveEighths,
    Weak,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Uniform,
    Clustered,
    Lattice,
}

fn load_pair(x: &Path, y: &Path) -> Result<(PointSet1D, PointSet1D)> {
    let xs = read_points(x).with_context(|| format!("reading {}", x.display()))?;
    let ys = read_points(y).with_context(|| format!("reading {}", y.display()))?;
    Ok((xs, ys))
}

fn write_profile(path: &Path, x: &PointSet1D, y: &PointSet1D, step: f64) -> Result<usize> {
    if !(step.is_finite() && step > 0.0) {
        bail!("--grid-step must be positive, got {step}");
    }
    let s = translation_breakpoints(x, y);
    let (lo, hi) = (s[0], s[s.len() - 1]);
    let count = ((hi - lo) / step).floor() as usize + 1;
    let deltas: Vec<f64> = (0..count).map(|i| lo + i as f64 * step).collect();
    let mut text = String::from("delta,value\n");
    for p in hausdorff_profile(x, y, &deltas) {
        text.push_str(&format!(
            "{},{}\n",
            gh1d::harness::fmt12(p.delta),
            gh1d::harness::fmt12(p.value)
        ));
    }
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok(count)
}

fn alignment_fields(out: &mut Report, r: &AlignmentReport) {
    out.num("achieved", r.achieved)
        .num("bound", r.bound)
        .num("distortion", r.distortion)
        .flag("flip", r.isometry.flip)
        .num("delta", r.isometry.delta)
        .text("case", format!("{:?}", r.case))
        .flag("used_fallback", r.used_fallback)
        .text("rule", r.winning_rule().unwrap_or("dh_iso"))
        .int("candidates", r.candidate_log.len() as u128);
}

fn run(cli: &Cli) -> Result<(Report, bool)> {
    let mut out = Report::default();
    let mut ok = true;
    match &cli.command {
        Command::Hausdorff { x, y, directed } => {
            let (xs, ys) = load_pair(x, y)?;
            if *directed {
                out.num("directed_hausdorff", directed_hausdorff(&xs, &ys));
            } else {
                out.num("hausdorff", hausdorff(&xs, &ys));
            }
        }
        Command::Iso {
            x,
            y,
            no_flip,
            profile,
            grid_step,
        } => {
            let (xs, ys) = load_pair(x, y)?;
            let opt = if *no_flip {
                dh_translation_only(&xs, &ys)
            } else {
                dh_iso(&xs, &ys)
            };
            out.num("dh_iso", opt.value)
                .flag("flip", opt.isometry.flip)
                .num("delta", opt.isometry.delta);
            if let (Some(path), Some(step)) = (profile, grid_step) {
                let oriented = if opt.isometry.flip { ys.reflected() } else { ys.clone() };
                let rows = write_profile(path, &xs, &oriented, *step)?;
                out.int("profile_rows", rows as u128);
            }
        }
        Command::Gh { x, y, method, cap } => {
            let (xs, ys) = load_pair(x, y)?;
            let method = match method {
                MethodArg::Brute => GhMethod::BruteForce,
                MethodArg::Monotone => GhMethod::MonotoneRestricted,
                MethodArg::Dp => GhMethod::NotesDp,
                MethodArg::Approx => GhMethod::Approx,
            };
            let r = gh(&xs, &ys, method, *cap)?;
            out.num("gh", r.value);
            if let Some(w) = &r.witness {
                out.value("witness", json!(w.pairs()));
            }
            if method == GhMethod::Approx {
                let a = gh_approx(&xs, &ys);
                out.num("lower", a.lower).num("upper", a.upper);
            }
        }
        Command::Align { x, y, corr, method } => {
            let (xs, ys) = load_pair(x, y)?;
            let c =
                read_correspondence(corr, xs.len(), ys.len()).with_context(|| format!("reading {}", corr.display()))?;
            let r = match method {
                AlignArg::FiveEighths => align_5_8(&xs, &ys, &c)?,
                AlignArg::Weak => weak_align_2(&xs, &ys, &c)?,
            };
            alignment_fields(&mut out, &r);
        }
        Command::Tight {
            k,
            delta,
            h,
            out: path,
            corr_out,
        } => {
            let t = gh1d::generate_tight(*k, *delta, *h)?;
            let inst = Instance::new(t.x.as_slice().to_vec(), t.y.as_slice().to_vec())
                .with_meta("generator", "tight")
                .with_meta("k", t.k)
                .with_meta("delta", t.delta)
                .with_meta("h", t.h);
            write_json(path, &inst)?;
            if let Some(cp) = corr_out {
                write_json(cp, &CorrFile::from(&t.corr))?;
            }
            out.num("eps", t.eps)
                .num("distortion", t.distortion)
                .num("expected_gh", t.expected_gh)
                .num("expected_dhiso", t.expected_dhiso)
                .num("dh_iso", dh_iso(&t.x, &t.y).value);
        }
        Command::Verify {
            trials,
            n_max,
            m_max,
            seed,
            out: path,
            kind,
            random_corrs,
        } => {
            let cfg = SweepConfig {
                trials: *trials,
                n_max: *n_max,
                m_max: *m_max,
                seed: *seed,
                kind: match kind {
                    KindArg::Uniform => InstanceKind::Uniform,
                    KindArg::Clustered => InstanceKind::Clustered,
                    KindArg::Lattice => InstanceKind::Lattice { jitter: 0.25 },
                },
                random_corrs: *random_corrs,
                ..Default::default()
            };
            let report = verify_sweep(&cfg)?;
            report.write_csv_file(path)?;
            let s = report.summary(cfg.tol);
            out.int("trials", s.trials as u128)
                .int("hard_failures", s.hard_failures as u128)
                .int("sandwich_violations", s.sandwich_violations as u128)
                .int("align_violations", s.align_violations as u128)
                .int("lemma_violations", s.lemma_violations as u128)
                .int("fallbacks", s.fallbacks as u128)
                .int("monotone_equal", s.monotone_equal as u128)
                .num("max_ratio", s.max_ratio);
            ok = s.hard_failures == 0;
        }
        Command::Bench {
            sizes,
            seed,
            full_limit,
        } => {
            if sizes.contains(&0) {
                bail!("sizes must be positive");
            }
            let rows = bench_report(sizes, *seed, *full_limit);
            for r in &rows {
                let p = format!("n{}", r.size);
                out.num(&format!("{p}_hausdorff_secs"), r.hausdorff_secs)
                    .int(&format!("{p}_candidates"), r.candidates)
                    .num(&format!("{p}_per_candidate_secs"), r.per_candidate_secs);
                if let Some(t) = r.translation_secs {
                    out.num(&format!("{p}_translation_secs"), t);
                }
            }
        }
    }
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, ok)) => {
            println!("{}", report.render(cli.json));
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("gh1d: hard assertion failures recorded");
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("gh1d: {e:#}");
            ExitCode::from(2)
        }
    }
}
