//! Seeded generators of strictly convex instances.
//!
//! All generators draw from ChaCha8 seeded with the given `u64`, so output is
//! identical across runs and platforms for the same [`GenSpec`].

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::geometry::{ConvexPointSet, Point};

/// Minimum angular gap between circle samples.
const MIN_ANGLE_GAP: f64 = 1e-6;
pub const DEFAULT_SPREAD: f64 = 0.05;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GenMode {
    Circle,
    Valtr,
    Cluster3,
}

impl GenMode {
    pub const ALL: [GenMode; 3] = [GenMode::Circle, GenMode::Valtr, GenMode::Cluster3];
}

impl fmt::Display for GenMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenMode::Circle => "circle",
            GenMode::Valtr => "valtr",
            GenMode::Cluster3 => "cluster3",
        })
    }
}

impl FromStr for GenMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "circle" => Ok(GenMode::Circle),
            "valtr" => Ok(GenMode::Valtr),
            "cluster3" => Ok(GenMode::Cluster3),
            other => Err(format!("unknown mode {other:?} (circle|valtr|cluster3)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub mode: GenMode,
    pub seed: u64,
    /// Only used by [`GenMode::Cluster3`].
    pub jitter: f64,
}

impl GenSpec {
    pub fn new(n: usize, mode: GenMode, seed: u64) -> Self {
        Self {
            n,
            mode,
            seed,
            jitter: DEFAULT_SPREAD,
        }
    }

    pub fn generate(&self) -> ConvexPointSet {
        match self.mode {
            GenMode::Circle => gen_circle(self.n, self.seed),
            GenMode::Valtr => gen_valtr(self.n, self.seed),
            GenMode::Cluster3 => gen_cluster3(self.n, self.seed, self.jitter),
        }
    }
}

fn check_n(n: usize) {
    assert!(n >= 4 && n % 2 == 0, "generators need an even n >= 4, got {n}");
}

/// `n` uniform angles on the unit circle, resampled until all gaps exceed 1e-6 rad.
pub fn gen_circle(n: usize, seed: u64) -> ConvexPointSet {
    check_n(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
        angles.sort_by(f64::total_cmp);
        let wrap_gap = angles[0] + TAU - angles[n - 1];
        if wrap_gap < MIN_ANGLE_GAP || angles.windows(2).any(|w| w[1] - w[0] < MIN_ANGLE_GAP) {
            continue;
        }
        let pts = angles.iter().map(|a| Point::new(a.cos(), a.sin())).collect();
        if let Ok(p) = ConvexPointSet::new(pts) {
            return p;
        }
    }
}

/// Random convex polygon from random coordinate increments: two monotone
/// chains per axis give edge-vector components summing to zero, which are
/// paired at random, sorted by angle and chained. Scaled to the unit square.
pub fn gen_valtr(n: usize, seed: u64) -> ConvexPointSet {
    check_n(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let xs = chain_increments(n, &mut rng);
        let mut ys = chain_increments(n, &mut rng);
        ys.shuffle(&mut rng);
        let mut vecs: Vec<Point> = xs.iter().zip(&ys).map(|(&x, &y)| Point::new(x, y)).collect();
        vecs.sort_by(|a, b| a.y.atan2(a.x).total_cmp(&b.y.atan2(b.x)));

        let mut pts = Vec::with_capacity(n);
        let mut cur = Point::new(0.0, 0.0);
        for v in &vecs {
            pts.push(cur);
            cur = Point::new(cur.x + v.x, cur.y + v.y);
        }
        let (min_x, max_x) = bounds(pts.iter().map(|p| p.x));
        let (min_y, max_y) = bounds(pts.iter().map(|p| p.y));
        let scale = (max_x - min_x).max(max_y - min_y);
        let pts = pts
            .into_iter()
            .map(|p| Point::new((p.x - min_x) / scale, (p.y - min_y) / scale))
            .collect();
        if let Ok(p) = ConvexPointSet::new(pts) {
            return p;
        }
    }
}

fn chain_increments(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let mut v: Vec<f64> = (0..n).map(|_| rng.gen::<f64>()).collect();
    v.sort_by(f64::total_cmp);
    let (min, max) = (v[0], v[n - 1]);
    let mut out = Vec::with_capacity(n);
    let (mut last_a, mut last_b) = (min, min);
    for &x in &v[1..n - 1] {
        if rng.gen::<bool>() {
            out.push(x - last_a);
            last_a = x;
        } else {
            out.push(last_b - x);
            last_b = x;
        }
    }
    out.push(max - last_a);
    out.push(last_b - max);
    out
}

fn bounds(it: impl Iterator<Item = f64>) -> (f64, f64) {
    it.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| {
        (lo.min(x), hi.max(x))
    })
}

/// Three tight clusters at the corners of an equilateral triangle inscribed in
/// the unit circle.
///
/// Each corner contributes an entry point on its incoming side, a run of
/// "tip" points on a small fillet inside the corner, and an exit point on its
/// outgoing side. Entry and exit are placed so that the chord between them is
/// shorter than the distance from any tip to the exit point, and the sides
/// between corners are long. With at least one pair of tips at every corner
/// (`n >= 12`) every bottleneck matching therefore uses the three corner
/// chords, which bound a single 3-bounded region. `spread` scales the fillet
/// radius and the per-corner jitter.
pub fn gen_cluster3(n: usize, seed: u64, spread: f64) -> ConvexPointSet {
    check_n(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spread = spread.clamp(1e-4, 0.2);
    let rotation = rng.gen_range(0.0..TAU);
    let corners: Vec<Point> = (0..3)
        .map(|k| {
            let a = rotation + k as f64 * TAU / 3.0;
            Point::new(a.cos(), a.sin())
        })
        .collect();
    let side = 3f64.sqrt();

    // Tip pairs per corner, dealt round-robin from a seeded corner.
    let corner_count = if n >= 6 { 3 } else { 2 };
    let mut tip_pairs = [0usize; 3];
    let first = rng.gen_range(0..3);
    for t in 0..(n - 2 * corner_count) / 2 {
        tip_pairs[(first + t) % 3] += 1;
    }

    let mut pts = Vec::with_capacity(n);
    for k in 0..corner_count {
        let c = corners[k];
        let prev = corners[(k + 2) % 3];
        let next = corners[(k + 1) % 3];
        let d_in = unit(c.sub(prev));
        let d_out = unit(next.sub(c));

        let mut jitter = || 1.0 + 0.4 * spread * rng.gen_range(-1.0..1.0);
        let entry_dist = 0.15 * side * jitter();
        let exit_dist = 0.30 * side * jitter();
        pts.push(Point::new(c.x - entry_dist * d_in.x, c.y - entry_dist * d_in.y));

        let tips = 2 * tip_pairs[k];
        if tips > 0 {
            // Fillet tangent to both sides; interior angle at a corner is π/3,
            // so the centre sits 2ρ from the corner along the inward bisector.
            let radius = 0.2 * spread;
            let bisector = unit(Point::new(d_out.x - d_in.x, d_out.y - d_in.y));
            let centre = Point::new(c.x + 2.0 * radius * bisector.x, c.y + 2.0 * radius * bisector.y);
            // Outward normals of the two sides (right of travel direction).
            let from = d_in.y.atan2(d_in.x) - PI / 2.0;
            let sweep = 2.0 * PI / 3.0;
            for t in 0..tips {
                let u = (t as f64 + 0.5 + 0.3 * rng.gen_range(-1.0..1.0)) / tips as f64;
                let a = from + sweep * u;
                pts.push(Point::new(centre.x + radius * a.cos(), centre.y + radius * a.sin()));
            }
        }
        pts.push(Point::new(c.x + exit_dist * d_out.x, c.y + exit_dist * d_out.y));
    }
    ConvexPointSet::new(pts).expect("cluster3 construction is strictly convex")
}

fn unit(p: Point) -> Point {
    let l = p.dot(p).sqrt();
    Point::new(p.x / l, p.y / l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        for mode in GenMode::ALL {
            let a = GenSpec::new(16, mode, 7).generate();
            let b = GenSpec::new(16, mode, 7).generate();
            assert_eq!(a, b, "{mode}");
            let c = GenSpec::new(16, mode, 8).generate();
            assert_ne!(a, c, "{mode}");
        }
    }

    #[test]
    fn valid_across_sizes() {
        for mode in GenMode::ALL {
            for n in (4..=40).step_by(2) {
                for seed in 0..20 {
                    let p = GenSpec::new(n, mode, seed).generate();
                    assert_eq!(p.len(), n);
                }
            }
        }
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("valtr".parse::<GenMode>(), Ok(GenMode::Valtr));
        assert!("square".parse::<GenMode>().is_err());
        assert_eq!(GenMode::Cluster3.to_string(), "cluster3");
    }
}
