//! Quadratic-time bottleneck matching.
//!
//! Some optimal matching either has at most one cascade, in which case it is a
//! whole-polygon table entry, or it has exactly three cascades around a single
//! 3-bounded region. In the second case one of the three inner diagonals can be
//! taken to be a candidate: a necessary diagonal turning by at most `2π/3`.
//! There are at most `2n` candidates, and for each one the remaining arc is
//! split into two table entries in O(n), for O(n²) overall.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::circular::add;
use crate::dp::SubproblemTable;
use crate::geometry::{classify_polarity_region, ConvexPointSet, PolarityRegion, ANGLE_EPS};
use crate::structure::{verify_matching, CascadeDecomposition, Matching};

/// Turning-angle threshold for candidates, widened by the angle tolerance.
pub const CANDIDATE_ANGLE: f64 = 2.0 * PI / 3.0 + ANGLE_EPS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Polarity {
    /// Interior points all lie near `i`; `i` is the pole.
    Negative,
    /// Interior points all lie near `j`; `j` is the pole.
    Positive,
    /// Mixed or boundary observations.
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CandidateDiagonal {
    pub i: usize,
    pub j: usize,
    pub tau: f64,
    pub polarity: Polarity,
}

impl CandidateDiagonal {
    pub fn pole(&self) -> Option<usize> {
        match self.polarity {
            Polarity::Negative => Some(self.i),
            Polarity::Positive => Some(self.j),
            Polarity::Unknown => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SolveStructure {
    OneCascadeOrLess,
    ThreeCascade,
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub value: f64,
    pub sq_value: f64,
    pub matching: Matching,
    pub candidate_count: usize,
    /// Cascade count of the returned matching.
    pub cascades: usize,
    pub structure: SolveStructure,
    pub elapsed: Duration,
}

/// Calls `f(i, size)` for every candidate arc `⟨i, i+size-1⟩`, in order of
/// increasing `i` then `size`.
#[inline]
fn for_each_candidate(
    points: &ConvexPointSet,
    table: &SubproblemTable,
    mut f: impl FnMut(usize, usize),
) {
    let n = points.len();
    // Diagonals only: both sides of the chord hold at least two points.
    for i in 0..n {
        for size in (4..=n.saturating_sub(2)).step_by(2) {
            if table.necessary(i, size) {
                let j = add(i, size - 1, n);
                if points.turning_angle_unchecked(i, j) <= CANDIDATE_ANGLE {
                    f(i, size);
                }
            }
        }
    }
}

/// All candidate diagonals, annotated with the polarity of their interior points.
pub fn enumerate_candidates(
    points: &ConvexPointSet,
    table: &SubproblemTable,
) -> Vec<CandidateDiagonal> {
    let n = points.len();
    let mut out = Vec::new();
    for_each_candidate(points, table, |i, size| {
        let j = add(i, size - 1, n);
        let (vi, vj) = (points.point(i), points.point(j));
        let mut seen_minus = false;
        let mut seen_plus = false;
        let mut seen_other = false;
        for off in 1..size - 1 {
            let p = points.point(add(i, off, n));
            match classify_polarity_region(vi, vj, p) {
                Ok(PolarityRegion::PiMinus) => seen_minus = true,
                Ok(PolarityRegion::PiPlus) => seen_plus = true,
                _ => seen_other = true,
            }
        }
        let polarity = match (seen_minus, seen_plus, seen_other) {
            (true, false, false) => Polarity::Negative,
            (false, true, false) => Polarity::Positive,
            _ => Polarity::Unknown,
        };
        out.push(CandidateDiagonal {
            i,
            j,
            tau: points.turning_angle_unchecked(i, j),
            polarity,
        });
    });
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Winner {
    /// Whole-polygon table entry starting here.
    One { start: usize },
    /// Candidate arc `(i, size)`; the rest of the polygon split after `first` points.
    Three { i: usize, size: usize, first: usize },
}

/// Computes a bottleneck non-crossing perfect matching.
pub fn solve(points: &ConvexPointSet) -> SolveReport {
    let started = Instant::now();
    let n = points.len();
    let table = SubproblemTable::build(points);

    let (mut best, start) = table.one_cascade_optimum();
    let mut winner = Winner::One { start };
    // Lexicographic (i, j, k) key of the current three-part winner.
    let mut winner_key = (usize::MAX, usize::MAX, usize::MAX);
    let mut candidate_count = 0usize;

    for_each_candidate(points, &table, |i, size| {
        candidate_count += 1;
        let base = table.value(i, size);
        if base > best {
            return;
        }
        let rest_start = add(i, size, n);
        let rest = n - size;
        let j = add(i, size - 1, n);
        for first in (2..=rest.saturating_sub(2)).step_by(2) {
            let v = base
                .max(table.value(rest_start, first))
                .max(table.value(add(rest_start, first, n), rest - first));
            if v > best {
                continue;
            }
            let k = add(rest_start, first - 1, n);
            let better = v < best
                || (matches!(winner, Winner::Three { .. }) && (i, j, k) < winner_key);
            if better {
                best = v;
                winner = Winner::Three { i, size, first };
                winner_key = (i, j, k);
            }
        }
    });

    let (pairs, structure) = match winner {
        Winner::One { start } => (
            table.reconstruct(start, n).expect("whole-polygon entry"),
            SolveStructure::OneCascadeOrLess,
        ),
        Winner::Three { i, size, first } => {
            let rest_start = add(i, size, n);
            let mut pairs = table.reconstruct(i, size).expect("candidate entry");
            pairs.extend(table.reconstruct(rest_start, first).expect("split entry"));
            pairs.extend(
                table
                    .reconstruct(add(rest_start, first, n), n - size - first)
                    .expect("split entry"),
            );
            (pairs, SolveStructure::ThreeCascade)
        }
    };
    let matching = Matching::new(n, pairs);

    let report = verify_matching(points, &matching);
    assert!(
        report.is_valid() && report.sq_value == best,
        "solver produced an inconsistent matching: {report:?} (expected squared value {best})"
    );
    let cascades = CascadeDecomposition::of(&matching)
        .map(|c| c.cascade_count())
        .expect("verified matching decomposes");

    SolveReport {
        value: best.sqrt(),
        sq_value: best,
        matching,
        candidate_count,
        cascades,
        structure,
        elapsed: started.elapsed(),
    }
}
