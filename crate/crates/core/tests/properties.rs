mod common;

use std::f64::consts::TAU;

use common::*;
use convex_bottleneck::baselines::oracle_enumerate;
use convex_bottleneck::circular::{add, arc_contains, segments_cross};
use convex_bottleneck::generators::{GenMode, GenSpec};
use convex_bottleneck::geometry::{classify_polarity_region, ConvexPointSet, Point};
use convex_bottleneck::structure::{verify_matching, CascadeDecomposition};
use proptest::prelude::*;

#[test]
fn enumeration_counts_and_validity() {
    let p = GenSpec::new(16, GenMode::Circle, 0).generate();
    for half in 1..=8u64 {
        let n = 2 * half as usize;
        let all: Vec<_> = oracle_enumerate(n).unwrap().collect();
        assert_eq!(all.len() as u64, catalan(half));
        if n == 16 {
            for m in &all {
                assert!(verify_matching(&p, m).is_valid());
            }
        }
    }
}

#[test]
fn no_matching_has_exactly_two_cascades() {
    for n in (2..=12).step_by(2) {
        for m in oracle_enumerate(n).unwrap() {
            let d = CascadeDecomposition::of(&m).unwrap();
            assert_ne!(d.cascade_count(), 2, "{:?}", m.pairs());
            assert_eq!(d.regions.len(), d.diagonal_count() + 1);
        }
    }
}

#[test]
fn combinatorial_crossing_matches_coordinates() {
    for mode in GenMode::ALL {
        let p = GenSpec::new(12, mode, 5).generate();
        let n = p.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if a == b || c == d {
                            continue;
                        }
                        if a == c || a == d || b == c || b == d {
                            assert!(segments_cross(a, b, c, d, n).is_err());
                            continue;
                        }
                        let geo = segments_intersect(p.point(a), p.point(b), p.point(c), p.point(d));
                        assert_eq!(segments_cross(a, b, c, d, n).unwrap(), geo, "{mode} {a} {b} {c} {d}");
                    }
                }
            }
        }
    }
}

#[test]
fn generators_are_valid_and_deterministic() {
    for mode in GenMode::ALL {
        for n in [4, 6, 10, 50, 200] {
            for seed in [0, 1, 99] {
                let a = GenSpec::new(n, mode, seed).generate();
                let b = GenSpec::new(n, mode, seed).generate();
                assert_eq!(a.points(), b.points());
                assert_eq!(a.len(), n);
                // Round trip through validation.
                assert!(ConvexPointSet::new(a.points().to_vec()).is_ok());
            }
        }
        let a = GenSpec::new(20, mode, 1).generate();
        let b = GenSpec::new(20, mode, 2).generate();
        assert_ne!(a.points(), b.points());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn turning_angles_add_up(half_n in 2usize..30, seed in 0u64..500, mode in 0usize..3, i in 0usize..60, a in 1usize..60, b in 1usize..60) {
        let p = GenSpec::new(2 * half_n, GenMode::ALL[mode], seed).generate();
        let n = p.len();
        let i = i % n;
        let (a, b) = (a % (n - 1) + 1, b % (n - 1) + 1);
        let (lo, hi) = (a.min(b), a.max(b));
        prop_assume!(lo < hi);
        let j = add(i, lo, n);
        let k = add(i, hi, n);
        prop_assert!(arc_contains(i, k, n, j));
        let whole = p.turning_angle(i, k).unwrap();
        let parts = p.turning_angle(i, j).unwrap() + p.exterior_angle(j) + p.turning_angle(j, k).unwrap();
        prop_assert!((whole - parts).abs() < 1e-9);
        // The two arcs plus the exterior angles at both ends close the loop.
        let around = p.turning_angle(i, k).unwrap() + p.turning_angle(k, i).unwrap()
            + p.exterior_angle(i) + p.exterior_angle(k);
        prop_assert!((around - TAU).abs() < 1e-9);
    }

    #[test]
    fn polarity_invariant_under_rigid_motion(
        ax in -3.0f64..3.0, ay in -3.0f64..3.0,
        bx in -3.0f64..3.0, by in -3.0f64..3.0,
        px in -3.0f64..3.0, py in -3.0f64..3.0,
        angle in 0.0f64..std::f64::consts::TAU, dx in -50.0f64..50.0, dy in -50.0f64..50.0,
    ) {
        let (vi, vj, q) = (Point::new(ax, ay), Point::new(bx, by), Point::new(px, py));
        prop_assume!(vi.sq_dist(vj) > 1e-3);
        let (s, c) = angle.sin_cos();
        let mv = |p: Point| Point::new(c * p.x - s * p.y + dx, s * p.x + c * p.y + dy);
        let before = classify_polarity_region(vi, vj, q).unwrap();
        let after = classify_polarity_region(mv(vi), mv(vj), mv(q)).unwrap();
        // Points sitting on a region boundary may flip under rounding.
        let d = vi.sq_dist(vj);
        let seg = vj.sub(vi);
        let near_boundary = (seg.cross(q.sub(vi)).abs() < 1e-6 * d)
            || (q.sq_dist(vi) - d).abs() < 1e-6 * d
            || (q.sq_dist(vj) - d).abs() < 1e-6 * d
            || {
                let m = Point::new((vi.x + vj.x) / 2.0 + seg.y / (2.0 * 3f64.sqrt()),
                                   (vi.y + vj.y) / 2.0 - seg.x / (2.0 * 3f64.sqrt()));
                (q.sq_dist(m) - d / 3.0).abs() < 1e-6 * d
            };
        prop_assume!(!near_boundary);
        prop_assert_eq!(before, after);
    }
}
