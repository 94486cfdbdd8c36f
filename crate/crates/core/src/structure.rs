//! Matchings, their validation, and the region/cascade analysis.
//!
//! In convex position the non-crossing diagonals of a matching form a laminar
//! family of index intervals. Cutting the polygon along the diagonals gives one
//! region per diagonal (between it and its children) plus one outer region
//! bounded by the root diagonals.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circular::interleaved;
use crate::geometry::ConvexPointSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("InvalidMatching: {0}")]
    InvalidMatching(String),
}

/// A set of index pairs over `n` points. Pairs are stored as `(min, max)`
/// sorted ascending; validity is checked by [`verify_matching`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matching {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut pairs: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        pairs.sort_unstable();
        Self { n, pairs }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    #[inline]
    pub fn is_edge(&self, (a, b): (usize, usize)) -> bool {
        is_edge(a, b, self.n)
    }

    /// Largest squared pair length. Pairs with out-of-range indices are skipped.
    pub fn sq_bottleneck(&self, points: &ConvexPointSet) -> (f64, Option<(usize, usize)>) {
        let mut best = (0.0, None);
        for &(a, b) in &self.pairs {
            if a < points.len() && b < points.len() {
                let d = points.sq_dist(a, b);
                if best.1.is_none() || d > best.0 {
                    best = (d, Some((a, b)));
                }
            }
        }
        best
    }

    /// Partner of each index, or `None` if the pairs do not cover `0..n` exactly once.
    fn partners(&self) -> Option<Vec<usize>> {
        if self.pairs.len() * 2 != self.n {
            return None;
        }
        let mut partner = vec![usize::MAX; self.n];
        for &(a, b) in &self.pairs {
            if a == b || b >= self.n || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return None;
            }
            partner[a] = b;
            partner[b] = a;
        }
        Some(partner)
    }
}

/// Whether `a` and `b` are neighbouring vertices of an `n`-gon.
#[inline]
pub fn is_edge(a: usize, b: usize, n: usize) -> bool {
    let d = a.abs_diff(b);
    d == 1 || d + 1 == n
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub perfect: bool,
    pub non_crossing: bool,
    /// Length of the longest pair.
    pub value: f64,
    pub sq_value: f64,
    pub longest_pair: Option<(usize, usize)>,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.perfect && self.non_crossing
    }
}

/// Checks coverage and crossing-freeness of `m` and computes its bottleneck.
/// Never fails; problems are reported as flags.
pub fn verify_matching(points: &ConvexPointSet, m: &Matching) -> VerifyReport {
    let n = points.len();
    let partner = if m.n() == n { m.partners() } else { None };
    let perfect = partner.is_some();
    let non_crossing = match &partner {
        Some(partner) => stack_non_crossing(partner),
        None => pairwise_non_crossing(m.pairs(), n),
    };
    let (sq_value, longest_pair) = m.sq_bottleneck(points);
    VerifyReport {
        perfect,
        non_crossing,
        value: sq_value.sqrt(),
        sq_value,
        longest_pair,
    }
}

/// Linear scan: a perfect matching of convex points is non-crossing iff its
/// pairs nest like balanced parentheses in index order.
fn stack_non_crossing(partner: &[usize]) -> bool {
    let mut stack = Vec::new();
    for (t, &p) in partner.iter().enumerate() {
        if p > t {
            stack.push(t);
        } else if stack.pop() != Some(p) {
            return false;
        }
    }
    stack.is_empty()
}

fn pairwise_non_crossing(pairs: &[(usize, usize)], n: usize) -> bool {
    let valid: Vec<_> = pairs
        .iter()
        .copied()
        .filter(|&(a, b)| a != b && a < n && b < n)
        .collect();
    for (x, &(a, b)) in valid.iter().enumerate() {
        for &(c, d) in &valid[x + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if interleaved(a, b, c, d, n) {
                return false;
            }
        }
    }
    true
}

/// Splits pairs into polygon edges and diagonals.
pub fn classify_pairs(m: &Matching) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
    m.pairs().iter().copied().partition(|&p| m.is_edge(p))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Region {
    pub bounding_diagonals: Vec<(usize, usize)>,
    pub bounding_edge_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CascadeDecomposition {
    /// Outer region first, then one region per diagonal in pair order.
    pub regions: Vec<Region>,
    /// Diagonals grouped into cascades, each sorted, ordered by first diagonal.
    pub cascades: Vec<Vec<(usize, usize)>>,
    pub three_bounded_count: usize,
}

impl CascadeDecomposition {
    /// Decomposes a perfect non-crossing matching.
    pub fn of(m: &Matching) -> Result<Self, StructureError> {
        let n = m.n();
        let partner = m
            .partners()
            .ok_or_else(|| StructureError::InvalidMatching("not perfect".into()))?;
        if !stack_non_crossing(&partner) {
            return Err(StructureError::InvalidMatching("crossing pairs".into()));
        }

        // Sorted by left endpoint, so parents precede children.
        let diagonals: Vec<(usize, usize)> = m
            .pairs()
            .iter()
            .copied()
            .filter(|&p| !m.is_edge(p))
            .collect();
        let k = diagonals.len();

        let mut children: Vec<Vec<usize>> = vec![Vec::new(); k];
        let mut roots = Vec::new();
        let mut open: Vec<usize> = Vec::new();
        for (d, &(a, _)) in diagonals.iter().enumerate() {
            while let Some(&top) = open.last() {
                if diagonals[top].1 < a {
                    open.pop();
                } else {
                    break;
                }
            }
            match open.last() {
                Some(&top) => children[top].push(d),
                None => roots.push(d),
            }
            open.push(d);
        }

        let span = |d: usize| diagonals[d].1 - diagonals[d].0;
        let mut regions = Vec::with_capacity(k + 1);
        regions.push(Region {
            bounding_diagonals: roots.iter().map(|&r| diagonals[r]).collect(),
            bounding_edge_count: n - roots.iter().map(|&r| span(r)).sum::<usize>(),
        });
        for d in 0..k {
            let mut bounding = vec![diagonals[d]];
            bounding.extend(children[d].iter().map(|&c| diagonals[c]));
            regions.push(Region {
                bounding_diagonals: bounding,
                bounding_edge_count: span(d) - children[d].iter().map(|&c| span(c)).sum::<usize>(),
            });
        }

        // Diagonals sharing a 2-bounded region belong to the same cascade.
        let mut uf = UnionFind::new(k);
        if roots.len() == 2 {
            uf.union(roots[0], roots[1]);
        }
        for d in 0..k {
            if let [c] = children[d][..] {
                uf.union(d, c);
            }
        }
        let mut groups: Vec<Vec<(usize, usize)>> = Vec::new();
        let mut group_of = vec![usize::MAX; k];
        for d in 0..k {
            let r = uf.find(d);
            if group_of[r] == usize::MAX {
                group_of[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[group_of[r]].push(diagonals[d]);
        }

        let three_bounded_count = regions
            .iter()
            .filter(|r| r.bounding_diagonals.len() == 3)
            .count();
        Ok(Self {
            regions,
            cascades: groups,
            three_bounded_count,
        })
    }

    pub fn cascade_count(&self) -> usize {
        self.cascades.len()
    }

    pub fn diagonal_count(&self) -> usize {
        self.cascades.iter().map(Vec::len).sum()
    }

    /// Largest number of diagonals bounding any single region.
    pub fn max_bounding(&self) -> usize {
        self.regions
            .iter()
            .map(|r| r.bounding_diagonals.len())
            .max()
            .unwrap_or(0)
    }
}

/// Region and cascade analysis of a perfect non-crossing matching of `points`.
pub fn cascade_decomposition(
    points: &ConvexPointSet,
    m: &Matching,
) -> Result<CascadeDecomposition, StructureError> {
    if m.n() != points.len() {
        return Err(StructureError::InvalidMatching(format!(
            "matching is over {} points, instance has {}",
            m.n(),
            points.len()
        )));
    }
    CascadeDecomposition::of(m)
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Keep the smaller index as root so group order follows pair order.
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}
