//! Shadows, lex initial segments, links and restrictions.

use std::collections::BTreeSet;

use itertools::Itertools;

use super::family::Family;
use super::set::VertexSet;
use crate::error::{Error, Result};

/// Exact `C(n, k)` for word-sized arguments; `None` on overflow.
pub fn binomial_u128(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// The `steps`-th shadow: all `(k − steps)`-subsets of edges.
pub fn shadow(family: &Family, steps: usize) -> Result<Family> {
    let k = family.k();
    if steps >= k && !(steps == 0 && k == 0) {
        return Err(Error::arg(format!("shadow depth {steps} must be below k={k}")));
    }
    let target = k - steps;
    let edges: BTreeSet<VertexSet> = family
        .iter()
        .flat_map(|e| e.subsets_of_size(target))
        .collect();
    Ok(Family::from_parts_unchecked(family.n(), target, edges))
}

/// The first `m` k-subsets of `[n]` in lexicographic order
/// (`A` before `B` iff `min(A △ B) ∈ A`).
pub fn lex_family(n: usize, k: usize, m: usize) -> Result<Family> {
    let fam = Family::empty(n, k)?;
    let total = binomial_u128(n, k).unwrap_or(u128::MAX);
    if m as u128 > total {
        return Err(Error::arg(format!("m={m} exceeds C({n},{k})={total}")));
    }
    let edges = (1..=n)
        .combinations(k)
        .take(m)
        .map(|c| VertexSet::from_vertices(c).expect("combination in range"));
    let mut fam = fam;
    for e in edges {
        fam.insert(e)?;
    }
    Ok(fam)
}

/// `F(V) = {F \ V : V ⊆ F ∈ F}`. Uniformity drops by `|V|`; when `|V| > k`
/// the link is the empty family with `k = 0`.
pub fn link(family: &Family, v: VertexSet) -> Family {
    link_filtered(family, v, |_| true)
}

/// `F(V̄) = {F ∈ F : F ∩ V = ∅}`.
pub fn restrict_avoid(family: &Family, v: VertexSet) -> Family {
    let edges = family.iter().filter(|e| e.is_disjoint(v)).collect();
    Family::from_parts_unchecked(family.n(), family.k(), edges)
}

/// `F(V, Q) = {F \ V : V ⊆ F ∈ F, F \ V ⊆ Q}`.
pub fn link_within(family: &Family, v: VertexSet, q: VertexSet) -> Family {
    link_filtered(family, v, |rest| rest.is_subset(q))
}

fn link_filtered(family: &Family, v: VertexSet, keep: impl Fn(VertexSet) -> bool) -> Family {
    let Some(k) = family.k().checked_sub(v.len()) else {
        return Family::from_parts_unchecked(family.n(), 0, BTreeSet::new());
    };
    let edges = family
        .iter()
        .filter(|e| v.is_subset(*e))
        .map(|e| e.difference(v))
        .filter(|&rest| keep(rest))
        .collect();
    Family::from_parts_unchecked(family.n(), k, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lists(f: &Family) -> Vec<Vec<usize>> {
        f.iter().map(|e| e.to_vec()).collect()
    }

    fn star_of_two(n: usize) -> Family {
        Family::from_predicate(n, 2, |e| e.contains(1) || e.contains(2)).unwrap()
    }

    #[test]
    fn shadow_examples() {
        let f = Family::from_vertex_lists(5, 3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(lists(&shadow(&f, 1).unwrap()), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let c4 = Family::complete_on(6, 2, VertexSet::ground(4)).unwrap();
        assert_eq!(lists(&shadow(&c4, 1).unwrap()), vec![vec![1], vec![2], vec![3], vec![4]]);
        assert_eq!(shadow(&c4, 0).unwrap(), c4);
        assert!(shadow(&c4, 2).is_err());
    }

    #[test]
    fn lex_examples() {
        assert_eq!(lists(&lex_family(4, 2, 3).unwrap()), vec![vec![1, 2], vec![1, 3], vec![1, 4]]);
        assert_eq!(lex_family(5, 2, 4).unwrap().len(), 4);
        assert!(lex_family(5, 2, 4).unwrap().iter().all(|e| e.contains(1)));
        let full = lex_family(6, 3, 20).unwrap();
        assert_eq!(full, Family::complete_on(6, 3, VertexSet::ground(6)).unwrap());
        assert!(lex_family(6, 3, 21).is_err());
    }

    #[test]
    fn link_examples() {
        let e = star_of_two(6);
        let one = VertexSet::from_vertices([1]).unwrap();
        assert_eq!(lists(&link(&e, one)), vec![vec![2], vec![3], vec![4], vec![5], vec![6]]);
        assert_eq!(link(&e, one).k(), 1);
        assert_eq!(
            lists(&restrict_avoid(&e, one)),
            vec![vec![2, 3], vec![2, 4], vec![2, 5], vec![2, 6]]
        );
        let c5 = Family::complete_on(5, 3, VertexSet::ground(5)).unwrap();
        let within = link_within(&c5, VertexSet::from_vertices([5]).unwrap(), VertexSet::ground(4));
        assert_eq!(within, Family::complete_on(5, 2, VertexSet::ground(4)).unwrap());
        let big = VertexSet::ground(3);
        assert!(link(&e, big).is_empty());
    }
}
