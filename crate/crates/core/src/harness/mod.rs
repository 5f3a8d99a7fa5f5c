//! File formats, seeded generators, the verification sweep and the scaling
//! report. The command-line front end is a thin layer over this module.

mod bench;
mod io;
mod random;
mod sweep;

pub use bench::{bench_report, BenchRow};
pub use io::{
    fmt12, format_sig, read_correspondence, read_json, read_points, write_json, CorrFile, Instance, PointsFile,
};
pub use random::{random_correspondence, random_instance, rng_for, InstanceKind};
pub use sweep::{
    check_correspondence, corr_seed, run_trial, trial_instance, trial_seed, verify_sweep, CorrCheck, SweepConfig,
    SweepReport, SweepRow, SweepSummary, CSV_HEADER,
};
