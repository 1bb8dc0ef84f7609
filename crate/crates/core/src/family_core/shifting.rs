//! The shifting operators `S_ij` and the componentwise order `≺`.

use std::collections::BTreeSet;

use super::family::Family;
use super::set::Edge;
use crate::error::{Error, Result};

/// `(a_1, …, a_k) ≺ (b_1, …, b_k)` iff `a_l ≤ b_l` for every `l`.
pub fn precedes(a: Edge, b: Edge) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::arg(format!("cannot compare {a} and {b}: sizes differ")));
    }
    Ok(a.iter().zip(b.iter()).all(|(x, y)| x <= y))
}

fn check_pair(family: &Family, i: usize, j: usize) -> Result<()> {
    if i == 0 || i >= j || j > family.n() {
        return Err(Error::arg(format!(
            "shift S_{{{i},{j}}} needs 1 <= i < j <= n={}",
            family.n()
        )));
    }
    Ok(())
}

/// Image of a single edge under `S_ij` relative to `family`.
#[inline]
fn shift_edge(family: &BTreeSet<Edge>, e: Edge, i: usize, j: usize) -> Edge {
    if e.contains(j) && !e.contains(i) {
        let moved = e.remove(j).insert(i);
        if !family.contains(&moved) {
            return moved;
        }
    }
    e
}

fn shift_raw(edges: &BTreeSet<Edge>, i: usize, j: usize) -> BTreeSet<Edge> {
    edges.iter().map(|&e| shift_edge(edges, e, i, j)).collect()
}

pub fn shift_ij(family: &Family, i: usize, j: usize) -> Result<Family> {
    check_pair(family, i, j)?;
    let edges = shift_raw(family.edges(), i, j);
    debug_assert_eq!(edges.len(), family.len());
    Ok(Family::from_parts_unchecked(family.n(), family.k(), edges))
}

/// Applies full passes of `S_ij` over `(i, j)` in lexicographic order until a
/// pass changes nothing. The sweep order is part of the output contract.
pub fn shift_closure(family: &Family) -> Family {
    let n = family.n();
    let mut edges = family.edges().clone();
    loop {
        let mut changed = false;
        for i in 1..n {
            for j in i + 1..=n {
                let next = shift_raw(&edges, i, j);
                if next != edges {
                    changed = true;
                    edges = next;
                }
            }
        }
        if !changed {
            break;
        }
    }
    Family::from_parts_unchecked(n, family.k(), edges)
}

/// Single-step test: every `(F \ {j}) ∪ {i}` with `i < j`, `j ∈ F`, `i ∉ F` is present.
pub fn is_shifted(family: &Family) -> bool {
    family.iter().all(|e| {
        e.iter().all(|j| {
            (1..j)
                .filter(|&i| !e.contains(i))
                .all(|i| family.contains(e.remove(j).insert(i)))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family_core::set::VertexSet;

    fn fam(n: usize, k: usize, lists: &[&[usize]]) -> Family {
        let lists: Vec<Vec<usize>> = lists.iter().map(|l| l.to_vec()).collect();
        Family::from_vertex_lists(n, k, &lists).unwrap()
    }

    fn set(v: &[usize]) -> Edge {
        VertexSet::from_vertices(v.iter().copied()).unwrap()
    }

    #[test]
    fn precedes_examples() {
        assert!(precedes(set(&[1, 3]), set(&[2, 3])).unwrap());
        assert!(!precedes(set(&[1, 4]), set(&[2, 3])).unwrap());
        assert!(precedes(set(&[2, 3, 4]), set(&[3, 4, 5])).unwrap());
        assert!(precedes(set(&[1, 2]), set(&[1, 2, 3])).is_err());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift_ij(&fam(4, 2, &[&[2, 3]]), 1, 2).unwrap(), fam(4, 2, &[&[1, 3]]));
        let f = fam(4, 2, &[&[3, 4], &[1, 4]]);
        assert_eq!(shift_ij(&f, 1, 3).unwrap(), f);
        let star = Family::from_predicate(6, 2, |e| e.contains(1) || e.contains(2)).unwrap();
        assert_eq!(shift_ij(&star, 1, 2).unwrap(), star);
        assert!(shift_ij(&f, 2, 2).is_err());
        assert!(shift_ij(&f, 3, 2).is_err());
        assert!(shift_ij(&f, 1, 5).is_err());
    }

    #[test]
    fn closure_examples() {
        assert_eq!(shift_closure(&fam(6, 2, &[&[5, 6]])), fam(6, 2, &[&[1, 2]]));
        assert_eq!(shift_closure(&fam(4, 2, &[&[1, 4], &[2, 3]])), fam(4, 2, &[&[1, 2], &[1, 3]]));
        let shifted = fam(6, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(shift_closure(&shifted), shifted);
    }

    #[test]
    fn shifted_examples() {
        let clique = Family::complete_on(6, 2, VertexSet::ground(4)).unwrap();
        assert!(is_shifted(&clique));
        assert!(!is_shifted(&fam(4, 2, &[&[2, 3]])));
        assert!(is_shifted(&Family::empty(4, 2).unwrap()));
    }
}
