//! Interval table for matchings with at most one cascade.
//!
//! Entries are addressed by `(start, size)` with even `size` in `2..=n`. The
//! entry for `(s, m)` is the optimal value (squared length) of matching the arc
//! `⟨s, s+m-1⟩` with at most one cascade, under the constraint that the chord
//! `(s, s+m-1)` borders a region with at most one other diagonal. Rows with
//! `size == n` cover the whole polygon starting at `s`.

use thiserror::Error;

use crate::circular::add;
use crate::geometry::{ConvexPointSet, REL_EPS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DpError {
    #[error("BadDomain: (start {start}, size {size}) is not a table entry for n = {n}")]
    BadDomain { start: usize, size: usize, n: usize },
}

/// Which recurrence case produced a stored minimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Choice {
    /// Match the two ends of the arc and recurse inside.
    UsePair,
    /// Match the first two points of the arc and recurse on the rest.
    UseLeftEdge,
    /// Match the last two points of the arc and recurse on the rest.
    UseRightEdge,
}

const TAG_CHOICE_MASK: u8 = 0b011;
const TAG_NECESSARY: u8 = 0b100;

impl Choice {
    #[inline]
    fn to_bits(self) -> u8 {
        match self {
            Choice::UsePair => 0,
            Choice::UseLeftEdge => 1,
            Choice::UseRightEdge => 2,
        }
    }

    #[inline]
    fn from_bits(b: u8) -> Self {
        match b & TAG_CHOICE_MASK {
            0 => Choice::UsePair,
            1 => Choice::UseLeftEdge,
            _ => Choice::UseRightEdge,
        }
    }
}

/// Values, choice tags and `necessary` flags for every `(start, even size)`.
#[derive(Debug, Clone)]
pub struct SubproblemTable {
    n: usize,
    // Row-major by size: index ((size / 2) - 1) * n + start.
    values: Vec<f64>,
    tags: Vec<u8>,
}

impl SubproblemTable {
    /// Fills the table in order of increasing arc size. O(n²) time and space.
    pub fn build(points: &ConvexPointSet) -> Self {
        let n = points.len();
        let rows = n / 2;
        let mut values = vec![0.0f64; rows * n];
        let mut tags = vec![0u8; rows * n];

        let edge: Vec<f64> = (0..n).map(|s| points.sq_dist(s, add(s, 1, n))).collect();
        // Size 2: the single edge; all three cases coincide, so the pair wins
        // the tie and is never necessary.
        values[..n].copy_from_slice(&edge);

        for h in 1..rows {
            let size = 2 * h + 2;
            let (prev_rows, cur_rows) = values.split_at_mut(h * n);
            let prev = &prev_rows[(h - 1) * n..];
            let cur = &mut cur_rows[..n];
            let cur_tags = &mut tags[h * n..(h + 1) * n];
            for s in 0..n {
                let s1 = if s + 1 == n { 0 } else { s + 1 };
                let s2 = if s1 + 1 == n { 0 } else { s1 + 1 };
                let last = add(s, size - 1, n);
                let second_last = if last == 0 { n - 1 } else { last - 1 };

                let case_pair = prev[s1].max(points.sq_dist(s, last));
                let case_left = prev[s2].max(edge[s]);
                let case_right = prev[s].max(edge[second_last]);

                let (mut best, mut choice) = (case_pair, Choice::UsePair);
                if case_left < best {
                    best = case_left;
                    choice = Choice::UseLeftEdge;
                }
                if case_right < best {
                    best = case_right;
                    choice = Choice::UseRightEdge;
                }
                let necessary = case_pair * (1.0 + REL_EPS) < case_left.min(case_right);
                cur[s] = best;
                cur_tags[s] = choice.to_bits() | if necessary { TAG_NECESSARY } else { 0 };
            }
        }

        Self { n, values, tags }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of stored entries, `n * n / 2`.
    pub fn entry_count(&self) -> usize {
        self.values.len()
    }

    #[inline]
    fn index(&self, start: usize, size: usize) -> usize {
        (size / 2 - 1) * self.n + start
    }

    fn check(&self, start: usize, size: usize) -> Result<(), DpError> {
        if start < self.n && size >= 2 && size <= self.n && size % 2 == 0 {
            Ok(())
        } else {
            Err(DpError::BadDomain {
                start,
                size,
                n: self.n,
            })
        }
    }

    /// Optimal squared value for arc `(start, size)`; `size == 0` reads as 0.
    ///
    /// Panics if `(start, size)` is outside the table domain.
    #[inline]
    pub fn value(&self, start: usize, size: usize) -> f64 {
        if size == 0 {
            return 0.0;
        }
        debug_assert!(self.check(start, size).is_ok());
        self.values[self.index(start, size)]
    }

    pub fn get(&self, start: usize, size: usize) -> Result<f64, DpError> {
        self.check(start, size)?;
        Ok(self.values[self.index(start, size)])
    }

    #[inline]
    pub fn choice(&self, start: usize, size: usize) -> Choice {
        Choice::from_bits(self.tags[self.index(start, size)])
    }

    /// Whether the end-to-end pair of the arc appears in every optimal solution,
    /// i.e. the pair case beats both edge cases by more than the relative tolerance.
    #[inline]
    pub fn necessary(&self, start: usize, size: usize) -> bool {
        self.tags[self.index(start, size)] & TAG_NECESSARY != 0
    }

    /// Best whole-polygon entry: `(squared value, start)`, smallest start on ties.
    pub fn one_cascade_optimum(&self) -> (f64, usize) {
        let row = &self.values[self.index(0, self.n)..];
        let mut best = (row[0], 0);
        for (s, &v) in row.iter().enumerate().skip(1) {
            if v < best.0 {
                best = (v, s);
            }
        }
        best
    }

    /// Pairs of an optimal matching of `⟨start, start+size-1⟩`, each pair in arc
    /// order, following the stored choice tags. O(size).
    pub fn reconstruct(&self, start: usize, size: usize) -> Result<Vec<(usize, usize)>, DpError> {
        self.check(start, size)?;
        let n = self.n;
        let mut pairs = Vec::with_capacity(size / 2);
        let (mut s, mut m) = (start, size);
        while m > 0 {
            let last = add(s, m - 1, n);
            match self.choice(s, m) {
                Choice::UsePair => {
                    pairs.push((s, last));
                    s = add(s, 1, n);
                }
                Choice::UseLeftEdge => {
                    pairs.push((s, add(s, 1, n)));
                    s = add(s, 2, n);
                }
                Choice::UseRightEdge => {
                    pairs.push((add(s, m - 2, n), last));
                }
            }
            m -= 2;
        }
        Ok(pairs)
    }
}

/// Builds the table for `points`.
pub fn build_subproblem_table(points: &ConvexPointSet) -> SubproblemTable {
    SubproblemTable::build(points)
}
