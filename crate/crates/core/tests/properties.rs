use proptest::prelude::*;

use gh1d::align::{case_quantities, tally_lemmas};
use gh1d::harness::random_correspondence;
use gh1d::{
    align_5_8, dh_iso, directed_hausdorff, distortion, gh_approx, gh_bruteforce, hausdorff, hausdorff_at,
    hausdorff_under, min_distortion_monotone, min_hausdorff_translation, min_hausdorff_translation_exhaustive,
    standardize, weak_align_2, Correspondence, Isometry1D, PointSet1D,
};

const TOL: f64 = 1e-9;

fn set(max: usize) -> impl Strategy<Value = PointSet1D> {
    prop::collection::vec(-10.0f64..10.0, 1..=max).prop_map(|v| PointSet1D::new(v).unwrap())
}

fn unit_set(max: usize) -> impl Strategy<Value = PointSet1D> {
    prop::collection::vec(0.0f64..1.0, 1..=max).prop_map(|v| PointSet1D::new(v).unwrap())
}

fn isometry() -> impl Strategy<Value = Isometry1D> {
    (any::<bool>(), -50.0f64..50.0).prop_map(|(flip, delta)| Isometry1D::new(flip, delta))
}

/// `(X, Y, C)` with `C` a random correspondence of matching shape.
fn instance(max: usize) -> impl Strategy<Value = (PointSet1D, PointSet1D, Correspondence)> {
    (unit_set(max), unit_set(max), any::<u64>()).prop_map(|(x, y, seed)| {
        let c = random_correspondence(x.len(), y.len(), seed, 0.2);
        (x, y, c)
    })
}

/// `½ · min Dist(C)` over every subset of `X × Y` that covers both sides.
fn gh_by_subsets(x: &PointSet1D, y: &PointSet1D) -> f64 {
    let cells: Vec<(usize, usize)> = (0..x.len()).flat_map(|i| (0..y.len()).map(move |j| (i, j))).collect();
    let mut best = f64::INFINITY;
    for mask in 1u32..(1 << cells.len()) {
        let pairs: Vec<_> = cells
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let covers_x = (0..x.len()).all(|i| pairs.iter().any(|p| p.0 == i));
        let covers_y = (0..y.len()).all(|j| pairs.iter().any(|p| p.1 == j));
        if !covers_x || !covers_y {
            continue;
        }
        let mut d: f64 = 0.0;
        for &(i, j) in &pairs {
            for &(k, l) in &pairs {
                d = d.max(((x[i] - x[k]).abs() - (y[j] - y[l]).abs()).abs());
            }
        }
        best = best.min(d);
    }
    0.5 * best
}

fn hausdorff_by_definition(x: &[f64], y: &[f64]) -> f64 {
    let one_way = |a: &[f64], b: &[f64]| {
        a.iter()
            .map(|p| b.iter().map(|q| (p - q).abs()).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    one_way(x, y).max(one_way(y, x))
}

proptest! {
    #[test]
    fn merge_scan_matches_definition(x in set(30), y in set(30)) {
        prop_assert_eq!(hausdorff(&x, &y), hausdorff_by_definition(x.as_slice(), y.as_slice()));
        prop_assert!(directed_hausdorff(&x, &y) <= hausdorff(&x, &y));
    }

    #[test]
    fn hausdorff_triangle_inequality(x in set(10), y in set(10), z in set(10)) {
        prop_assert!(hausdorff(&x, &z) <= hausdorff(&x, &y) + hausdorff(&y, &z) + 1e-12);
    }

    #[test]
    fn hausdorff_under_matches_transformed_set(x in set(10), y in set(10), t in isometry()) {
        let direct = hausdorff(&x, &y.transformed(&t));
        prop_assert!((hausdorff_under(&x, &y, &t) - direct).abs() <= 1e-12);
    }

    #[test]
    fn distortion_is_isometry_invariant(
        (x, y, c) in instance(6),
        tx in isometry(),
        ty in isometry(),
    ) {
        let moved = c.reindex_both(&tx, &ty);
        let before = distortion(&c, &x, &y).unwrap().value;
        let after = distortion(&moved, &x.transformed(&tx), &y.transformed(&ty)).unwrap().value;
        prop_assert!((before - after).abs() <= 1e-9);
    }

    #[test]
    fn isometry_algebra(a in isometry(), b in isometry(), t in -100.0f64..100.0) {
        prop_assert!((a.inverse().apply(a.apply(t)) - t).abs() <= 1e-9);
        prop_assert!((a.after(&b).apply(t) - a.apply(b.apply(t))).abs() <= 1e-9);
        prop_assert_eq!(a.after(&b).flip, a.flip != b.flip);
    }

    #[test]
    fn translation_search_beats_every_grid_point(x in unit_set(6), y in unit_set(6)) {
        let exact = min_hausdorff_translation(&x, &y);
        let lo = x.min() - y.max() - 0.5;
        let hi = x.max() - y.min() + 0.5;
        for i in 0..=400 {
            let d = lo + (hi - lo) * i as f64 / 400.0;
            prop_assert!(exact.value <= hausdorff_at(&x, &y, d) + 1e-12);
        }
        prop_assert!((hausdorff_at(&x, &y, exact.delta) - exact.value).abs() <= 1e-12);
    }

    #[test]
    fn fast_search_equals_exhaustive(x in set(7), y in set(7)) {
        let fast = min_hausdorff_translation(&x, &y);
        let slow = min_hausdorff_translation_exhaustive(&x, &y);
        prop_assert!((fast.value - slow.value).abs() <= 1e-12, "{:?} vs {:?}", fast, slow);
    }

    #[test]
    fn search_agrees_on_tie_heavy_inputs(
        xv in prop::collection::vec(-6i32..6, 1..=8),
        yv in prop::collection::vec(-6i32..6, 1..=8),
    ) {
        let x = PointSet1D::new(xv.into_iter().map(f64::from).collect::<Vec<_>>()).unwrap();
        let y = PointSet1D::new(yv.into_iter().map(f64::from).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(min_hausdorff_translation(&x, &y), min_hausdorff_translation_exhaustive(&x, &y));
    }

    #[test]
    fn dh_iso_symmetric_and_invariant(x in set(6), y in set(6), t in isometry()) {
        let v = dh_iso(&x, &y).value;
        prop_assert!((v - dh_iso(&y, &x).value).abs() <= 1e-9);
        prop_assert!((v - dh_iso(&x, &y.transformed(&t)).value).abs() <= 1e-9);
        prop_assert!(v <= hausdorff(&x, &y) + 1e-12);
        let opt = dh_iso(&x, &y);
        prop_assert!((hausdorff_under(&x, &y, &opt.isometry) - opt.value).abs() <= 1e-12);
    }

    #[test]
    fn dh_iso_scales_linearly(x in set(6), y in set(6), c in 0.01f64..100.0) {
        let base = dh_iso(&x, &y).value;
        let scaled = dh_iso(&x.scaled(c).unwrap(), &y.scaled(c).unwrap()).value;
        prop_assert!((scaled - c * base).abs() <= 1e-9 * c.max(1.0));
    }

    #[test]
    fn standardize_relations((x, y, c) in instance(5)) {
        let sc = standardize(&x, &y, &c).unwrap();
        let d = sc.distortion;
        prop_assert!((d - distortion(&c, &x, &y).unwrap().value).abs() <= 1e-12);
        prop_assert!((distortion(&sc.corr, &sc.xs, &sc.ys).unwrap().value - d).abs() <= 1e-9);
        if d > 0.0 {
            prop_assert!((sc.x_prime() - sc.y_prime() - d / 2.0).abs() <= 1e-9);
            prop_assert!((sc.y() - sc.x() - d / 2.0).abs() <= 1e-9);
            prop_assert!(sc.x_prime() <= sc.x() && sc.y_prime() <= sc.y());
            prop_assert!(sc.h >= -1e-12 && sc.h <= sc.y() - sc.y_prime() + 1e-9);
        }
        // The frame maps the original inputs onto (xs, ys).
        let t = sc.to_original(&Isometry1D::IDENTITY);
        prop_assert!((hausdorff_under(&x, &y, &t) - hausdorff(&sc.xs, &sc.ys)).abs() <= 1e-9);
    }

    #[test]
    fn mirror_is_an_involution((x, y, c) in instance(5)) {
        let sc = standardize(&x, &y, &c).unwrap();
        let m = sc.mirrored();
        prop_assert_eq!(&m.mirrored(), &sc);
        prop_assert_eq!(m.h, sc.h);
        if !sc.is_trivial() {
            prop_assert!((m.x_prime() - m.y_prime() - sc.distortion / 2.0).abs() <= 1e-9);
        }
        // Left- and right-hand extremes trade places.
        prop_assert_eq!(case_quantities(&m).a.len(), case_quantities(&sc).a_prime.len());
    }

    #[test]
    fn aligners_meet_their_bounds((x, y, c) in instance(5)) {
        let d = distortion(&c, &x, &y).unwrap().value;
        let r = align_5_8(&x, &y, &c).unwrap();
        prop_assert!(r.achieved <= 0.625 * d + TOL);
        prop_assert!((hausdorff_under(&x, &y, &r.isometry) - r.achieved).abs() <= 1e-12);
        let w = weak_align_2(&x, &y, &c).unwrap();
        prop_assert!(w.achieved <= d + TOL);
        prop_assert!((hausdorff_under(&x, &y, &w.isometry) - w.achieved).abs() <= 1e-12);
    }

    #[test]
    fn lemma_checks_hold((x, y, c) in instance(6)) {
        let sc = standardize(&x, &y, &c).unwrap();
        prop_assert_eq!(tally_lemmas(&sc, TOL).violations(), 0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn bruteforce_matches_subset_oracle(x in unit_set(3), y in unit_set(3)) {
        let got = gh_bruteforce(&x, &y).unwrap();
        prop_assert!((got.value - gh_by_subsets(&x, &y)).abs() <= 1e-12);
        let w = got.witness.unwrap();
        prop_assert!((0.5 * distortion(&w, &x, &y).unwrap().value - got.value).abs() <= 1e-12);
    }

    #[test]
    fn sandwich_and_bracket(x in unit_set(5), y in unit_set(5)) {
        let gh = gh_bruteforce(&x, &y).unwrap().value;
        let iso = dh_iso(&x, &y).value;
        prop_assert!(gh <= iso + TOL);
        prop_assert!(iso <= 1.25 * gh + TOL);
        prop_assert!(iso <= 2.0 * gh + TOL);
        let a = gh_approx(&x, &y);
        prop_assert!(a.lower <= gh + TOL && gh <= a.upper + TOL);
    }

    #[test]
    fn gh_lower_bound_and_symmetry(x in unit_set(5), y in unit_set(5), t in isometry()) {
        let gh = gh_bruteforce(&x, &y).unwrap().value;
        prop_assert!(gh + TOL >= 0.5 * (x.diameter() - y.diameter()).abs());
        prop_assert!((gh - gh_bruteforce(&y, &x).unwrap().value).abs() <= TOL);
        prop_assert!((gh - gh_bruteforce(&x, &y.transformed(&t)).unwrap().value).abs() <= TOL);
    }

    #[test]
    fn staircases_never_beat_brute_force(x in unit_set(5), y in unit_set(5)) {
        let gh = gh_bruteforce(&x, &y).unwrap().value;
        let mono = min_distortion_monotone(&x, &y).unwrap();
        prop_assert!(0.5 * mono.value + TOL >= gh);
        prop_assert!((distortion(&mono.witness, &x, &y).unwrap().value - mono.value).abs() <= 1e-12);
    }
}
