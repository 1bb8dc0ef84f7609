//! Bitmask vertex sets over a ground set of at most 64 vertices.
//!
//! Vertices are 1-based at the API surface; vertex `v` lives in bit `v - 1`.
//! Numeric order of the masks coincides with colexicographic order of the
//! sets, which is why `VertexSet` derives `Ord` directly from the word.

use std::fmt;

use crate::error::{Error, Result, MAX_VERTICES};

#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

/// A k-subset of the ground set. Uniformity is enforced by the owning family.
pub type Edge = VertexSet;

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    #[inline]
    pub const fn mask(self) -> u64 {
        self.0
    }

    /// Builds a set from 1-based vertices. Duplicates are rejected.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut mask = 0u64;
        for v in vertices {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::arg(format!("vertex {v} outside [1, {MAX_VERTICES}]")));
            }
            let bit = 1u64 << (v - 1);
            if mask & bit != 0 {
                return Err(Error::arg(format!("duplicate vertex {v}")));
            }
            mask |= bit;
        }
        Ok(VertexSet(mask))
    }

    /// The interval `[lo, hi]` (empty when `lo > hi`).
    pub fn interval(lo: usize, hi: usize) -> Self {
        if lo > hi || hi == 0 {
            return VertexSet::EMPTY;
        }
        let lo = lo.max(1);
        debug_assert!(hi <= MAX_VERTICES);
        VertexSet(low_bits(hi) & !low_bits(lo - 1))
    }

    /// `[n] = {1, ..., n}`.
    pub fn ground(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v >= 1 && v <= 64 && self.0 & (1u64 << (v - 1)) != 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn insert(self, v: usize) -> Self {
        VertexSet(self.0 | (1u64 << (v - 1)))
    }

    #[inline]
    pub fn remove(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    /// Largest vertex, if any.
    #[inline]
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Smallest vertex, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of exactly `size` elements, in colex order.
    pub fn subsets_of_size(self, size: usize) -> SubsetsOfSize {
        SubsetsOfSize::new(self, size)
    }
}

#[inline]
fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Enumerates fixed-size subsets of a base set by walking index combinations
/// over the base's elements (Gosper's hack on positions).
pub struct SubsetsOfSize {
    elems: Vec<u64>,
    state: Option<u64>,
    limit: u64,
}

impl SubsetsOfSize {
    fn new(base: VertexSet, size: usize) -> Self {
        let elems: Vec<u64> = base.iter().map(|v| 1u64 << (v - 1)).collect();
        let m = elems.len();
        let (state, limit) = if size > m {
            (None, 0)
        } else if size == 0 {
            (Some(0), 0)
        } else {
            (Some(low_bits(size)), if m == 64 { u64::MAX } else { 1u64 << m })
        };
        SubsetsOfSize { elems, state, limit }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.state?;
        let mut mask = 0u64;
        let mut bits = cur;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            mask |= self.elems[i];
            bits &= bits - 1;
        }
        if cur == 0 {
            self.state = None;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.wrapping_add(c);
            if r == 0 || (self.limit != u64::MAX && r >= self.limit) {
                self.state = None;
            } else {
                let next = (((r ^ cur) >> 2) / c) | r;
                if self.limit != u64::MAX && next >= self.limit {
                    self.state = None;
                } else {
                    self.state = Some(next);
                }
            }
        }
        Some(VertexSet(mask))
    }
}

/// All k-subsets of `[n]` in colex order.
pub fn k_subsets(n: usize, k: usize) -> SubsetsOfSize {
    VertexSet::ground(n).subsets_of_size(k)
}

/// Checks `n` against the bitmask width.
pub fn check_capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity(n))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_and_ground() {
        assert_eq!(VertexSet::interval(2, 4).to_vec(), vec![2, 3, 4]);
        assert!(VertexSet::interval(5, 4).is_empty());
        assert_eq!(VertexSet::ground(64).len(), 64);
        assert_eq!(VertexSet::interval(64, 64).to_vec(), vec![64]);
    }

    #[test]
    fn rejects_bad_vertices() {
        assert!(VertexSet::from_vertices([0]).is_err());
        assert!(VertexSet::from_vertices([65]).is_err());
        assert!(VertexSet::from_vertices([3, 3]).is_err());
    }

    #[test]
    fn subsets_are_colex_and_complete() {
        let all: Vec<_> = k_subsets(5, 2).map(|s| s.to_vec()).collect();
        assert_eq!(all.len(), 10);
        assert_eq!(all[0], vec![1, 2]);
        assert_eq!(all[1], vec![1, 3]);
        assert_eq!(all[2], vec![2, 3]);
        assert_eq!(all[9], vec![4, 5]);
        let masks: Vec<u64> = k_subsets(7, 3).map(|s| s.mask()).collect();
        assert!(masks.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(masks.len(), 35);
        assert_eq!(k_subsets(4, 0).count(), 1);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(4, 4).count(), 1);
    }

    #[test]
    fn subsets_of_sparse_base() {
        let base = VertexSet::from_vertices([2, 5, 9]).unwrap();
        let subs: Vec<_> = base.subsets_of_size(2).map(|s| s.to_vec()).collect();
        assert_eq!(subs, vec![vec![2, 5], vec![2, 9], vec![5, 9]]);
    }

    #[test]
    fn full_width_subsets() {
        assert_eq!(k_subsets(64, 1).count(), 64);
        assert_eq!(k_subsets(64, 63).count(), 64);
        assert_eq!(k_subsets(64, 64).count(), 1);
    }
}
