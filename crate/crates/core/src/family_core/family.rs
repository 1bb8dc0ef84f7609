use std::collections::BTreeSet;

use super::set::{check_capacity, Edge, VertexSet};
use crate::error::{Error, Result};

/// A k-uniform family over the ground set `[n]`.
///
/// Edges are kept in a `BTreeSet` keyed by their bitmask, so iteration is
/// colexicographic and serialization is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Family {
    n: usize,
    k: usize,
    edges: BTreeSet<Edge>,
}

impl Family {
    pub fn empty(n: usize, k: usize) -> Result<Self> {
        check_capacity(n)?;
        if k > n {
            return Err(Error::arg(format!("uniformity k={k} exceeds ground set size n={n}")));
        }
        Ok(Family { n, k, edges: BTreeSet::new() })
    }

    /// Builds a family, validating range and uniformity. Duplicate edges are an error.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, k: usize, edges: I) -> Result<Self> {
        let mut fam = Family::empty(n, k)?;
        for e in edges {
            fam.check_edge(e)?;
            if !fam.edges.insert(e) {
                return Err(Error::arg(format!("duplicate edge {e}")));
            }
        }
        Ok(fam)
    }

    /// Like [`Family::from_edges`] but silently merges duplicates.
    pub fn from_edge_set<I: IntoIterator<Item = Edge>>(n: usize, k: usize, edges: I) -> Result<Self> {
        let mut fam = Family::empty(n, k)?;
        for e in edges {
            fam.check_edge(e)?;
            fam.edges.insert(e);
        }
        Ok(fam)
    }

    pub fn from_vertex_lists(n: usize, k: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let edges = lists
            .iter()
            .map(|l| VertexSet::from_vertices(l.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Family::from_edges(n, k, edges)
    }

    /// All k-subsets of `[n]` satisfying `pred`.
    pub fn from_predicate(n: usize, k: usize, pred: impl Fn(Edge) -> bool) -> Result<Self> {
        check_capacity(n)?;
        let edges = super::set::k_subsets(n, k).filter(|&e| pred(e));
        Family::from_edge_set(n, k, edges)
    }

    /// The complete k-graph on the vertex set `q`, over ground set `[n]`.
    pub fn complete_on(n: usize, k: usize, q: VertexSet) -> Result<Self> {
        if q.max().is_some_and(|m| m > n) {
            return Err(Error::arg(format!("clique vertex set {q} not inside [{n}]")));
        }
        Family::from_edge_set(n, k, q.subsets_of_size(k))
    }

    fn check_edge(&self, e: Edge) -> Result<()> {
        if e.len() != self.k {
            return Err(Error::arg(format!("edge {e} has size {}, expected {}", e.len(), self.k)));
        }
        if !e.is_subset(VertexSet::ground(self.n)) {
            return Err(Error::arg(format!("edge {e} not inside [{}]", self.n)));
        }
        Ok(())
    }

    pub fn insert(&mut self, e: Edge) -> Result<bool> {
        self.check_edge(e)?;
        Ok(self.edges.insert(e))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    #[inline]
    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    /// Edges in colex order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Edge> + ExactSizeIterator + '_ {
        self.edges.iter().copied()
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn masks(&self) -> Vec<u64> {
        self.edges.iter().map(|e| e.mask()).collect()
    }

    pub fn is_subfamily_of(&self, other: &Family) -> bool {
        self.k == other.k && self.edges.is_subset(&other.edges)
    }

    /// Union of all edges.
    pub fn support(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc.union(e))
    }

    /// Same edges viewed over a larger (or equal) ground set.
    pub fn with_ground(&self, n: usize) -> Result<Family> {
        check_capacity(n)?;
        if !self.support().is_subset(VertexSet::ground(n)) || self.k > n {
            return Err(Error::arg(format!("family does not fit in [{n}]")));
        }
        Ok(Family { n, k: self.k, edges: self.edges.clone() })
    }

    pub(crate) fn from_parts_unchecked(n: usize, k: usize, edges: BTreeSet<Edge>) -> Family {
        debug_assert!(edges.iter().all(|e| e.len() == k && e.is_subset(VertexSet::ground(n))));
        Family { n, k, edges }
    }

    pub(crate) fn same_ground(&self, other: &Family) -> Result<()> {
        if self.n != other.n {
            return Err(Error::arg(format!(
                "families live on different ground sets ([{}] vs [{}])",
                self.n, other.n
            )));
        }
        Ok(())
    }
}

impl<'a> IntoIterator for &'a Family {
    type Item = Edge;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, Edge>>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_edges() {
        assert!(Family::from_vertex_lists(4, 2, &[vec![1, 5]]).is_err());
        assert!(Family::from_vertex_lists(4, 2, &[vec![1, 2, 3]]).is_err());
        assert!(Family::from_vertex_lists(4, 2, &[vec![1, 2], vec![2, 1]]).is_err());
        assert!(matches!(Family::empty(65, 2), Err(Error::Capacity(65))));
    }

    #[test]
    fn iteration_is_colex() {
        let f = Family::from_vertex_lists(4, 2, &[vec![3, 4], vec![1, 2], vec![1, 4], vec![2, 3]])
            .unwrap();
        let order: Vec<_> = f.iter().map(|e| e.to_vec()).collect();
        assert_eq!(order, vec![vec![1, 2], vec![2, 3], vec![1, 4], vec![3, 4]]);
    }
}
