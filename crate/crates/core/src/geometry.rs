//! Point primitives and the validated convex point set.
//!
//! All length comparisons elsewhere in the crate go through [`ConvexPointSet::sq_dist`];
//! square roots are only taken when a value is reported.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Absolute tolerance for angle boundary tests, in radians.
pub const ANGLE_EPS: f64 = 1e-9;
/// Relative tolerance for distance equality tests.
pub const REL_EPS: f64 = 1e-9;

/// Relative threshold below which a turn is treated as collinear:
/// `|cross| <= COLLINEAR_EPS * |e1| * |e2|`.
const COLLINEAR_EPS: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("OddCount: {0} points, an even number is required")]
    OddCount(usize),
    #[error("TooFew: {0} points, at least 2 are required")]
    TooFew(usize),
    #[error("NonFinite: point {0} has a NaN or infinite coordinate")]
    NonFinite(usize),
    #[error("DuplicatePoint: points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("NotStrictlyConvex: turn at vertex {0} is not a strict left turn")]
    NotStrictlyConvex(usize),
    #[error("NotCcw: vertices are in clockwise order")]
    NotCcw,
    #[error("BadIndex: ({0}, {1}) for {2} points")]
    BadIndex(usize, usize, usize),
    #[error("DegenerateSegment: segment endpoints coincide")]
    DegenerateSegment,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }

    #[inline]
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    #[inline]
    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    #[inline]
    pub fn sq_dist(self, o: Point) -> f64 {
        let dx = self.x - o.x;
        let dy = self.y - o.y;
        dx * dx + dy * dy
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

/// Strictly convex, counterclockwise, even-size point sequence.
///
/// `ext_prefix[t]` holds the sum of exterior angles at vertices `0..t`, so any
/// turning angle along an arc is a difference of two prefix entries.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPointSet {
    points: Vec<Point>,
    ext_prefix: Vec<f64>,
}

impl ConvexPointSet {
    /// Validates `points` and precomputes exterior-angle prefix sums.
    pub fn new(points: Vec<Point>) -> Result<Self, GeometryError> {
        validate_convex_ccw(points)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    #[inline]
    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn ext_prefix(&self) -> &[f64] {
        &self.ext_prefix
    }

    /// Exterior angle at vertex `t`.
    #[inline]
    pub fn exterior_angle(&self, t: usize) -> f64 {
        self.ext_prefix[t + 1] - self.ext_prefix[t]
    }

    /// Squared Euclidean distance between vertices `i` and `j`.
    #[inline]
    pub fn sq_dist(&self, i: usize, j: usize) -> f64 {
        self.points[i].sq_dist(self.points[j])
    }

    /// Turning angle of the arc from `i` to `j`: the sum of exterior angles at
    /// `i+1, ..., j-1` (circular). `τ(i, i+1) = 0`.
    pub fn turning_angle(&self, i: usize, j: usize) -> Result<f64, GeometryError> {
        let n = self.len();
        if i >= n || j >= n || i == j {
            return Err(GeometryError::BadIndex(i, j, n));
        }
        Ok(self.turning_angle_unchecked(i, j))
    }

    /// [`turning_angle`](Self::turning_angle) without index checks; `i != j`, both `< n`.
    #[inline]
    pub fn turning_angle_unchecked(&self, i: usize, j: usize) -> f64 {
        let n = self.len();
        let a = if i + 1 == n { 0 } else { i + 1 };
        let p = &self.ext_prefix;
        if a <= j {
            p[j] - p[a]
        } else {
            p[n] - p[a] + p[j]
        }
    }
}

/// Validates a point sequence as strictly convex and counterclockwise.
pub fn validate_convex_ccw(points: Vec<Point>) -> Result<ConvexPointSet, GeometryError> {
    let n = points.len();
    if n % 2 == 1 {
        return Err(GeometryError::OddCount(n));
    }
    if n < 2 {
        return Err(GeometryError::TooFew(n));
    }
    if let Some(bad) = points.iter().position(|p| !p.is_finite()) {
        return Err(GeometryError::NonFinite(bad));
    }
    check_duplicates(&points)?;

    if n == 2 {
        // A two-gon turns by π at each endpoint.
        return Ok(ConvexPointSet {
            points,
            ext_prefix: vec![0.0, PI, TAU],
        });
    }

    let mut ext = Vec::with_capacity(n);
    let mut left = 0usize;
    let mut right = 0usize;
    let mut first_bad = None;
    for t in 0..n {
        let prev = points[(t + n - 1) % n];
        let cur = points[t];
        let next = points[(t + 1) % n];
        let e1 = cur.sub(prev);
        let e2 = next.sub(cur);
        let cross = e1.cross(e2);
        let scale = e1.dot(e1).sqrt() * e2.dot(e2).sqrt();
        if cross > COLLINEAR_EPS * scale {
            left += 1;
        } else if cross < -COLLINEAR_EPS * scale {
            right += 1;
            first_bad.get_or_insert(t);
        } else {
            first_bad.get_or_insert(t);
        }
        ext.push(cross.atan2(e1.dot(e2)));
    }

    if right == n {
        return Err(GeometryError::NotCcw);
    }
    if left != n {
        return Err(GeometryError::NotStrictlyConvex(first_bad.unwrap_or(0)));
    }

    let mut ext_prefix = Vec::with_capacity(n + 1);
    let mut acc = 0.0;
    ext_prefix.push(acc);
    for a in &ext {
        acc += a;
        ext_prefix.push(acc);
    }
    // All left turns but winding more than once: a self-intersecting star.
    if (acc - TAU).abs() > ANGLE_EPS {
        return Err(GeometryError::NotStrictlyConvex(0));
    }
    Ok(ConvexPointSet { points, ext_prefix })
}

fn check_duplicates(points: &[Point]) -> Result<(), GeometryError> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| {
        points[a]
            .x
            .total_cmp(&points[b].x)
            .then(points[a].y.total_cmp(&points[b].y))
    });
    for w in order.windows(2) {
        if points[w[0]] == points[w[1]] {
            let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
            return Err(GeometryError::DuplicatePoint(a, b));
        }
    }
    Ok(())
}

/// Region of a point relative to a directed segment `vi -> vj` and the
/// circular arc on its right side from which the segment subtends `π/3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PolarityRegion {
    LeftOfLine,
    OnLine,
    /// Right of the line, inside the arc, farther than `|vi vj|` from `vj`.
    PiMinus,
    /// Right of the line, inside the arc, farther than `|vi vj|` from `vi`.
    PiPlus,
    /// Right of the line, inside the arc, within `|vi vj|` of both endpoints.
    PiZero,
    OutsideH,
}

/// Classifies `p` against the polarity regions of the directed segment `vi -> vj`.
///
/// Ties on the distance tests go to [`PolarityRegion::PiZero`].
pub fn classify_polarity_region(
    vi: Point,
    vj: Point,
    p: Point,
) -> Result<PolarityRegion, GeometryError> {
    if vi == vj {
        return Err(GeometryError::DegenerateSegment);
    }
    let seg = vj.sub(vi);
    let d2 = seg.dot(seg);
    let cross = seg.cross(p.sub(vi));
    // cross / |seg| is the signed distance; compare it against |seg| * REL_EPS.
    if cross.abs() <= REL_EPS * d2 {
        return Ok(PolarityRegion::OnLine);
    }
    if cross > 0.0 {
        return Ok(PolarityRegion::LeftOfLine);
    }

    // Circle through vi, vj with radius d/√3, centre on the right side at
    // distance d/(2√3) from the midpoint.
    let mid = Point::new(0.5 * (vi.x + vj.x), 0.5 * (vi.y + vj.y));
    let k = 1.0 / (2.0 * 3f64.sqrt());
    // Right normal of seg, scaled by |seg|.
    let centre = Point::new(mid.x + k * seg.y, mid.y - k * seg.x);
    let r2 = d2 / 3.0;
    if p.sq_dist(centre) > r2 * (1.0 + REL_EPS) {
        return Ok(PolarityRegion::OutsideH);
    }

    let far_from_i = p.sq_dist(vi) > d2 * (1.0 + REL_EPS);
    let far_from_j = p.sq_dist(vj) > d2 * (1.0 + REL_EPS);
    Ok(match (far_from_i, far_from_j) {
        (true, false) => PolarityRegion::PiPlus,
        (false, true) => PolarityRegion::PiMinus,
        // Both far cannot happen inside the arc region; keep it on the tie side.
        _ => PolarityRegion::PiZero,
    })
}
