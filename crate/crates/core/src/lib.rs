//! Distances between finite subsets of the real line.
//!
//! * [`hausdorff`]: Hausdorff distance, its exact minimization over
//!   translations, and `d_{H,iso}` (translations plus an optional flip).
//! * [`gh`]: the Gromov-Hausdorff distance by exhaustive search, a
//!   crossing-free restriction, a prefix dynamic program and a bracket from
//!   `d_{H,iso}`.
//! * [`align`]: turning a correspondence of distortion `D` into an isometry
//!   with Hausdorff value at most `5D/8`.
//! * [`tight`]: instances on which `d_{H,iso} / d_GH` approaches `5/4`.
//! * [`harness`]: file formats, seeded generators and verification sweeps.
//!
//! ```
//! use gh1d::{dh_iso, gh_bruteforce, PointSet1D};
//!
//! let x = PointSet1D::new(vec![0.0, 1.0]).unwrap();
//! let y = PointSet1D::new(vec![5.0, 7.0]).unwrap();
//! let iso = dh_iso(&x, &y);
//! let gh = gh_bruteforce(&x, &y).unwrap();
//! assert_eq!(iso.value, 0.5);
//! assert_eq!(gh.value, 0.5);
//! ```

pub mod align;
pub mod correspondence;
pub mod error;
pub mod gh;
pub mod harness;
pub mod hausdorff;
pub mod isometry;
pub mod point_set;
pub mod tight;

/// Absolute tolerance used for bound comparisons throughout.
pub const DEFAULT_TOL: f64 = 1e-9;

pub use align::{
    align_5_8, align_5_8_with, classify, standardize, weak_align_2, weak_align_2_with, AlignCase, AlignOptions,
    AlignmentReport, CaseKind, StandardConfig, WeakCase,
};
pub use correspondence::{crossing, distortion, Correspondence, Distortion, Edge};
pub use error::{Error, Result};
pub use gh::{
    gh, gh_approx, gh_bruteforce, gh_bruteforce_capped, gh_dp_notes, min_distortion_monotone, ApproxInterval, GhMethod,
    GhResult, MonotoneResult, DEFAULT_CAP,
};
pub use hausdorff::{
    dh_iso, dh_translation_only, directed_hausdorff, hausdorff, hausdorff_at, hausdorff_profile, hausdorff_under,
    min_hausdorff_translation, min_hausdorff_translation_exhaustive, IsoOptimum, TranslationOptimum,
    TranslationProfilePoint,
};
pub use isometry::Isometry1D;
pub use point_set::{apply_isometry, make_point_set, PointSet1D};
pub use tight::{generate as generate_tight, profile_table, TableRow, TightInstance};
