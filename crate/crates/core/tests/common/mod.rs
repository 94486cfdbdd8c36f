#![allow(dead_code)]

use std::f64::consts::PI;

use convex_bottleneck::geometry::{ConvexPointSet, Point};
use convex_bottleneck::structure::{CascadeDecomposition, Matching};

pub fn sq4() -> ConvexPointSet {
    ConvexPointSet::new(vec![
        Point::new(0.0, 0.0),
        Point::new(1.0, 0.0),
        Point::new(1.0, 1.0),
        Point::new(0.0, 1.0),
    ])
    .unwrap()
}

pub fn hex6() -> ConvexPointSet {
    on_unit_circle(&[0.0, 60.0, 120.0, 180.0, 240.0, 300.0])
}

pub fn skew4() -> ConvexPointSet {
    on_unit_circle(&[0.0, 10.0, 20.0, 180.0])
}

pub fn on_unit_circle(degrees: &[f64]) -> ConvexPointSet {
    ConvexPointSet::new(
        degrees
            .iter()
            .map(|d| {
                let a = d * PI / 180.0;
                Point::new(a.cos(), a.sin())
            })
            .collect(),
    )
    .unwrap()
}

pub fn rel_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs())
}

/// Brute-force bottleneck value by recursive enumeration over linear ranges,
/// written independently of the library's enumerator.
pub fn brute_force_sq(points: &ConvexPointSet) -> f64 {
    fn go(p: &ConvexPointSet, lo: usize, hi: usize) -> f64 {
        if lo > hi {
            return 0.0;
        }
        let mut best = f64::INFINITY;
        let mut k = lo + 1;
        while k <= hi {
            let inner = if k > lo + 1 { go(p, lo + 1, k - 1) } else { 0.0 };
            let outer = if k < hi { go(p, k + 1, hi) } else { 0.0 };
            best = best.min(p.sq_dist(lo, k).max(inner).max(outer));
            k += 2;
        }
        best
    }
    go(points, 0, points.len() - 1)
}

/// All perfect matchings of `0..m` (as local indices) without crossings,
/// each as a list of (a, b) with a < b. Independent recursive generator.
pub fn local_matchings(m: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo > hi {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        let mut k = lo + 1;
        while k <= hi {
            let inner = if k > lo + 1 { go(lo + 1, k - 1) } else { vec![vec![]] };
            let outer = if k < hi { go(k + 1, hi) } else { vec![vec![]] };
            for a in &inner {
                for b in &outer {
                    let mut v = vec![(lo, k)];
                    v.extend(a);
                    v.extend(b);
                    out.push(v);
                }
            }
            k += 2;
        }
        out
    }
    if m == 0 {
        return vec![vec![]];
    }
    go(0, m - 1)
}

/// Whether a matching of the arc (local indices `0..m`, chord `(0, m-1)`)
/// satisfies the single-cascade subproblem constraint: at most one cascade,
/// and the chord's region is bounded by at most one other diagonal.
///
/// The arc is embedded in an `(m + 2)`-gon with the two extra points matched
/// to each other, so the chord `(0, m-1)` counts as a diagonal.
pub fn satisfies_subproblem_constraint(m: usize, local: &[(usize, usize)]) -> bool {
    if m == 2 {
        return true;
    }
    let mut pairs = local.to_vec();
    pairs.push((m, m + 1));
    let big = Matching::new(m + 2, pairs);
    let dec = CascadeDecomposition::of(&big).expect("valid local matching");
    if dec.cascade_count() > 1 {
        return false;
    }
    let has_chord = local.iter().any(|&(a, b)| (a, b) == (0, m - 1));
    let chord_region = if has_chord {
        dec.regions[1..]
            .iter()
            .find(|r| r.bounding_diagonals.first() == Some(&(0, m - 1)))
            .expect("chord region")
    } else {
        &dec.regions[0]
    };
    let others = chord_region
        .bounding_diagonals
        .iter()
        .filter(|&&d| d != (0, m - 1))
        .count();
    others <= 1
}

/// Coordinate-based proper segment intersection.
pub fn segments_intersect(p1: Point, p2: Point, p3: Point, p4: Point) -> bool {
    let o = |a: Point, b: Point, c: Point| (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    let d1 = o(p3, p4, p1);
    let d2 = o(p3, p4, p2);
    let d3 = o(p1, p2, p3);
    let d4 = o(p1, p2, p4);
    (d1 > 0.0) != (d2 > 0.0) && (d3 > 0.0) != (d4 > 0.0)
}

pub fn catalan(m: u64) -> u64 {
    (0..m).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}
