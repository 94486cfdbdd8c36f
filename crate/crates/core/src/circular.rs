//! Circular index arithmetic over `0..n`.
//!
//! `⟨i, j⟩` denotes the arc `i, i+1, ..., j` taken mod `n`; it is not the same
//! arc as `⟨j, i⟩`.

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CircularError {
    #[error("SharedEndpoint: segments ({0}, {1}) and ({2}, {3}) share an endpoint")]
    SharedEndpoint(usize, usize, usize, usize),
}

/// Canonical representative of `i mod n` for possibly negative offsets.
#[inline]
pub fn wrap(i: isize, n: usize) -> usize {
    i.rem_euclid(n as isize) as usize
}

/// `(i + k) mod n` for `i < n`.
#[inline]
pub fn add(i: usize, k: usize, n: usize) -> usize {
    let s = i + k % n;
    if s >= n {
        s - n
    } else {
        s
    }
}

/// `(i - k) mod n` for `i < n`.
#[inline]
pub fn sub(i: usize, k: usize, n: usize) -> usize {
    add(i, n - k % n, n)
}

/// Number of indices in `⟨i, j⟩`.
#[inline]
pub fn arc_size(i: usize, j: usize, n: usize) -> usize {
    (j + n - i) % n + 1
}

/// Whether some matching contains the pair `(i, j)` with `⟨i, j⟩` matched
/// internally, i.e. the arc has even size.
#[inline]
pub fn feasible(i: usize, j: usize, n: usize) -> bool {
    arc_size(i, j, n) % 2 == 0
}

/// Whether `k ∈ ⟨i, j⟩`.
#[inline]
pub fn arc_contains(i: usize, j: usize, n: usize, k: usize) -> bool {
    (k + n - i) % n <= (j + n - i) % n
}

/// Whether chords `(a, b)` and `(c, d)` of a strictly convex polygon cross.
///
/// Chords cross exactly when their endpoints interleave around the circle.
pub fn segments_cross(
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    n: usize,
) -> Result<bool, CircularError> {
    if a == c || a == d || b == c || b == d {
        return Err(CircularError::SharedEndpoint(a, b, c, d));
    }
    Ok(interleaved(a, b, c, d, n))
}

/// [`segments_cross`] for endpoints already known to be distinct.
#[inline]
pub(crate) fn interleaved(a: usize, b: usize, c: usize, d: usize, n: usize) -> bool {
    // Open arc ⟨a+1, b-1⟩ as offsets 1..span from a.
    let span = (b + n - a) % n;
    let inside = |k: usize| {
        let off = (k + n - a) % n;
        off > 0 && off < span
    };
    inside(c) != inside(d)
}

/// An arc `⟨start, end⟩` of an `n`-cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArcInterval {
    pub start: usize,
    pub end: usize,
    pub n: usize,
}

impl ArcInterval {
    pub fn new(start: usize, end: usize, n: usize) -> Self {
        debug_assert!(start < n && end < n);
        Self { start, end, n }
    }

    /// Arc starting at `start` with `size` elements, `1 <= size <= n`.
    pub fn with_size(start: usize, size: usize, n: usize) -> Self {
        debug_assert!(size >= 1 && size <= n);
        Self::new(start, add(start, size - 1, n), n)
    }

    pub fn size(&self) -> usize {
        arc_size(self.start, self.end, self.n)
    }

    pub fn is_feasible(&self) -> bool {
        feasible(self.start, self.end, self.n)
    }

    pub fn contains(&self, k: usize) -> bool {
        arc_contains(self.start, self.end, self.n, k)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.size()).map(move |o| add(self.start, o, self.n))
    }
}
