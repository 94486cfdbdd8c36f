//! Interval table checked against constrained brute force on small arcs.

mod common;

use common::*;
use convex_bottleneck::circular::add;
use convex_bottleneck::dp::{Choice, SubproblemTable};
use convex_bottleneck::generators::{GenMode, GenSpec};
use convex_bottleneck::geometry::ConvexPointSet;

/// Optimal bottleneck of v2v3 for points at 0°, 10°, 20°, 180°: the chord
/// spanning 160°, 2·sin(80°). Frozen from `brute_force_sq`.
const SKEW4_VALUE: f64 = 1.969_615_506_024_416;

#[test]
fn skew4_frozen_value_matches_brute_force() {
    let p = skew4();
    assert!(rel_eq(brute_force_sq(&p).sqrt(), SKEW4_VALUE, 1e-12));
}

#[test]
fn skew4_table() {
    let p = skew4();
    let t = SubproblemTable::build(&p);
    assert!(rel_eq(t.value(1, 4).sqrt(), SKEW4_VALUE, 1e-12));
    let (v, s) = t.one_cascade_optimum();
    assert!(rel_eq(v.sqrt(), SKEW4_VALUE, 1e-12));
    // Every whole-polygon entry ties at n = 4, so the smallest start wins.
    assert_eq!(s, 0);
    assert_eq!(t.reconstruct(1, 4).unwrap(), vec![(1, 0), (2, 3)]);
}

#[test]
fn square_table_tie_breaking() {
    let t = SubproblemTable::build(&sq4());
    assert_eq!(t.choice(0, 4), Choice::UsePair);
    assert!(!t.necessary(0, 4));
    assert_eq!(t.one_cascade_optimum(), (1.0, 0));
}

/// Brute-force optimum of the constrained subproblem on arc `(start, size)`
/// and the set of optimal local matchings.
fn constrained_optimum(p: &ConvexPointSet, start: usize, size: usize) -> (f64, Vec<Vec<(usize, usize)>>) {
    let n = p.len();
    let global = |l: usize| add(start, l, n);
    let admissible: Vec<(f64, Vec<(usize, usize)>)> = local_matchings(size)
        .into_iter()
        .filter(|m| satisfies_subproblem_constraint(size, m))
        .map(|m| {
            let v = m
                .iter()
                .map(|&(a, b)| p.sq_dist(global(a), global(b)))
                .fold(0.0, f64::max);
            (v, m)
        })
        .collect();
    let best = admissible.iter().map(|x| x.0).fold(f64::INFINITY, f64::min);
    let optimal = admissible
        .into_iter()
        .filter(|(v, _)| *v <= best * (1.0 + 1e-12))
        .map(|(_, m)| m)
        .collect();
    (best, optimal)
}

fn instances() -> Vec<ConvexPointSet> {
    let mut v = vec![sq4(), hex6(), skew4()];
    for mode in GenMode::ALL {
        for n in [4, 6, 8, 10, 12] {
            for seed in 0..12 {
                v.push(GenSpec::new(n, mode, seed).generate());
            }
        }
    }
    v
}

#[test]
fn entries_equal_constrained_brute_force() {
    for p in instances() {
        let n = p.len();
        let t = SubproblemTable::build(&p);
        for size in (2..n).step_by(2) {
            for start in 0..n {
                let (best, _) = constrained_optimum(&p, start, size);
                assert!(
                    rel_eq(t.value(start, size), best, 1e-12),
                    "n={n} start={start} size={size}: table {} brute {}",
                    t.value(start, size),
                    best
                );
            }
        }
    }
}

#[test]
fn necessary_pairs_are_in_every_optimum() {
    let mut checked = 0;
    for p in instances() {
        let n = p.len();
        let t = SubproblemTable::build(&p);
        for size in (4..n).step_by(2) {
            for start in 0..n {
                if !t.necessary(start, size) {
                    continue;
                }
                checked += 1;
                let (_, optimal) = constrained_optimum(&p, start, size);
                for m in optimal {
                    assert!(m.contains(&(0, size - 1)), "n={n} start={start} size={size}: {m:?}");
                }
            }
        }
    }
    assert!(checked > 50, "only {checked} necessary entries exercised");
}

#[test]
fn reconstruction_reproduces_entries_exactly() {
    for p in instances() {
        let n = p.len();
        let t = SubproblemTable::build(&p);
        for size in (2..=n).step_by(2) {
            for start in 0..n {
                let pairs = t.reconstruct(start, size).unwrap();
                assert_eq!(pairs.len(), size / 2);
                let mut seen = vec![false; n];
                for &(a, b) in &pairs {
                    assert!(!seen[a] && !seen[b]);
                    seen[a] = true;
                    seen[b] = true;
                }
                for off in 0..size {
                    assert!(seen[add(start, off, n)]);
                }
                let v = pairs.iter().map(|&(a, b)| p.sq_dist(a, b)).fold(0.0, f64::max);
                assert_eq!(v, t.value(start, size));
            }
        }
    }
}

#[test]
fn entries_bounded_by_all_edges_matching() {
    for p in instances() {
        let n = p.len();
        let t = SubproblemTable::build(&p);
        for size in (2..=n).step_by(2) {
            for start in 0..n {
                let all_edges = (0..size / 2)
                    .map(|h| p.sq_dist(add(start, 2 * h, n), add(start, 2 * h + 1, n)))
                    .fold(0.0, f64::max);
                assert!(t.value(start, size) <= all_edges);
            }
        }
    }
}

#[test]
fn entry_count_is_n_times_half_n() {
    for n in [4usize, 10, 32] {
        let t = SubproblemTable::build(&GenSpec::new(n, GenMode::Circle, 3).generate());
        assert_eq!(t.entry_count(), n * (n / 2));
    }
}
