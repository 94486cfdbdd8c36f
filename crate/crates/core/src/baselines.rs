//! Reference engines: the cubic interval DP over linear index ranges and an
//! exhaustive enumerator of all non-crossing perfect matchings.

use thiserror::Error;

use crate::geometry::{ConvexPointSet, REL_EPS};
use crate::structure::Matching;

/// Largest `n` accepted by the exhaustive oracle (Catalan(10) = 16796 matchings).
pub const ORACLE_MAX_N: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum BaselineError {
    #[error("TooLarge: oracle is limited to n <= {ORACLE_MAX_N}, got {0}")]
    TooLarge(usize),
    #[error("OddCount: {0} points")]
    OddCount(usize),
}

#[derive(Debug, Clone)]
pub struct BaselineSolution {
    pub value: f64,
    pub sq_value: f64,
    pub matching: Matching,
}

/// Cubic DP: `b(i, j)` over linear ranges `i..=j` with `j - i` odd, splitting on
/// the partner `k` of `i`. Answer is `b(0, n-1)`; ties pick the smallest `k`.
pub fn cubic_solve(points: &ConvexPointSet) -> BaselineSolution {
    let n = points.len();
    let at = |i: usize, j: usize| i * n + j;
    let mut b = vec![0.0f64; n * n];
    let mut split = vec![0u32; n * n];

    for len in (2..=n).step_by(2) {
        for i in 0..=n - len {
            let j = i + len - 1;
            let mut best = f64::INFINITY;
            let mut best_k = i + 1;
            for k in (i + 1..=j).step_by(2) {
                let mut v = points.sq_dist(i, k);
                if k > i + 1 {
                    v = v.max(b[at(i + 1, k - 1)]);
                }
                if k < j {
                    v = v.max(b[at(k + 1, j)]);
                }
                if v < best {
                    best = v;
                    best_k = k;
                }
            }
            b[at(i, j)] = best;
            split[at(i, j)] = best_k as u32;
        }
    }

    let mut pairs = Vec::with_capacity(n / 2);
    let mut stack = vec![(0usize, n - 1)];
    while let Some((i, j)) = stack.pop() {
        let k = split[at(i, j)] as usize;
        pairs.push((i, k));
        if k > i + 1 {
            stack.push((i + 1, k - 1));
        }
        if k < j {
            stack.push((k + 1, j));
        }
    }
    let sq_value = b[at(0, n - 1)];
    BaselineSolution {
        value: sq_value.sqrt(),
        sq_value,
        matching: Matching::new(n, pairs),
    }
}

/// Lazily yields every non-crossing perfect matching of `n` convex points:
/// point `lo` of the first open range is matched to each `k` at odd offset,
/// leaving `lo+1..k` and `k+1..=hi` to be matched.
pub struct NonCrossingMatchings {
    n: usize,
    // Each frame: pairs fixed so far and the ranges still to match.
    stack: Vec<(Vec<(usize, usize)>, Vec<(usize, usize)>)>,
}

impl Iterator for NonCrossingMatchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        while let Some((pairs, mut pending)) = self.stack.pop() {
            let Some((lo, hi)) = pending.pop() else {
                return Some(Matching::new(self.n, pairs));
            };
            // Push in reverse so smaller partners come out first.
            for k in (lo + 1..hi + 1).step_by(2).rev() {
                let mut p = pairs.clone();
                p.push((lo, k));
                let mut rest = pending.clone();
                if k < hi {
                    rest.push((k + 1, hi));
                }
                if k > lo + 1 {
                    rest.push((lo + 1, k - 1));
                }
                self.stack.push((p, rest));
            }
        }
        None
    }
}

/// All non-crossing perfect matchings of `n` points in convex position,
/// Catalan(n/2) of them.
pub fn oracle_enumerate(n: usize) -> Result<NonCrossingMatchings, BaselineError> {
    if n % 2 == 1 {
        return Err(BaselineError::OddCount(n));
    }
    if n > ORACLE_MAX_N {
        return Err(BaselineError::TooLarge(n));
    }
    let pending = if n == 0 { vec![] } else { vec![(0, n - 1)] };
    Ok(NonCrossingMatchings {
        n,
        stack: vec![(Vec::with_capacity(n / 2), pending)],
    })
}

#[derive(Debug, Clone)]
pub struct OracleSolution {
    pub value: f64,
    pub sq_value: f64,
    /// Every matching within relative tolerance of the optimum, in enumeration order.
    pub all_optimal: Vec<Matching>,
}

/// Exhaustive minimum over [`oracle_enumerate`].
pub fn oracle_solve(points: &ConvexPointSet) -> Result<OracleSolution, BaselineError> {
    let scored: Vec<(f64, Matching)> = oracle_enumerate(points.len())?
        .map(|m| (m.sq_bottleneck(points).0, m))
        .collect();
    let sq_value = scored
        .iter()
        .map(|(v, _)| *v)
        .fold(f64::INFINITY, f64::min);
    // Squared values: relative 1e-9 on lengths is about 2e-9 on squares.
    let cutoff = sq_value * (1.0 + 2.0 * REL_EPS);
    let all_optimal = scored
        .into_iter()
        .filter(|(v, _)| *v <= cutoff)
        .map(|(_, m)| m)
        .collect();
    Ok(OracleSolution {
        value: sq_value.sqrt(),
        sq_value,
        all_optimal,
    })
}
