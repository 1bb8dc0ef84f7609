//! Exact matching, covering and clique numbers.

use std::collections::HashSet;

use serde::Serialize;

use super::family::Family;
use super::set::{Edge, VertexSet};
use crate::error::{Error, Result};

/// ν, τ and ω together with certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub nu: usize,
    pub tau: usize,
    pub omega: usize,
    pub shifted: bool,
    pub matching_witness: Vec<Vec<usize>>,
    pub cover_witness: Vec<usize>,
    pub clique_witness: Vec<usize>,
}

impl InvariantReport {
    pub fn compute(family: &Family) -> Result<Self> {
        let (nu, matching) = matching_number(family);
        let (tau, cover) = covering_number(family)?;
        let (omega, clique) = clique_number(family)?;
        Ok(InvariantReport {
            nu,
            tau,
            omega,
            shifted: super::shifting::is_shifted(family),
            matching_witness: matching.iter().map(|e| e.to_vec()).collect(),
            cover_witness: cover.to_vec(),
            clique_witness: clique.to_vec(),
        })
    }
}

fn greedy_matching(edges: &[u64]) -> Vec<u64> {
    let mut used = 0u64;
    let mut out = Vec::new();
    for &e in edges {
        if e & used == 0 {
            used |= e;
            out.push(e);
        }
        if e == 0 {
            break;
        }
    }
    out
}

fn support(edges: &[u64]) -> u64 {
    edges.iter().fold(0, |acc, &e| acc | e)
}

/// Branches on the first remaining edge `e`: some maximum matching contains an
/// edge meeting `e`, so only those edges need to be tried at this level.
fn grow_matching(avail: &[u64], k: u32, cur: &mut Vec<u64>, best: &mut Vec<u64>) {
    if cur.len() > best.len() {
        best.clone_from(cur);
    }
    let Some(&e) = avail.first() else { return };
    let bound = avail.len().min((support(avail).count_ones() / k) as usize);
    if cur.len() + bound <= best.len() {
        return;
    }
    for &f in avail.iter().filter(|&&f| f & e != 0) {
        let rest: Vec<u64> = avail.iter().copied().filter(|&g| g & f == 0).collect();
        cur.push(f);
        grow_matching(&rest, k, cur, best);
        cur.pop();
        if best.len() >= cur.len() + bound {
            return;
        }
    }
}

/// Maximum matching of a list of nonempty, equal-size edge masks.
pub fn max_matching_masks(edges: &[u64], k: usize) -> Vec<u64> {
    if k == 0 {
        return edges.first().copied().into_iter().collect();
    }
    let mut best = greedy_matching(edges);
    let mut cur = Vec::new();
    grow_matching(edges, k as u32, &mut cur, &mut best);
    best
}

/// Some `need` pairwise disjoint members of `edges`, if they exist.
pub fn find_matching_of_size(edges: &[u64], k: usize, need: usize) -> Option<Vec<u64>> {
    fn rec(avail: &[u64], k: u32, need: usize, cur: &mut Vec<u64>) -> bool {
        if need == 0 {
            return true;
        }
        let Some(&e) = avail.first() else { return false };
        if avail.len() < need || ((support(avail).count_ones() / k) as usize) < need {
            return false;
        }
        for &f in avail.iter().filter(|&&f| f & e != 0) {
            let rest: Vec<u64> = avail.iter().copied().filter(|&g| g & f == 0).collect();
            cur.push(f);
            if rec(&rest, k, need - 1, cur) {
                return true;
            }
            cur.pop();
        }
        false
    }
    if k == 0 {
        return (need <= edges.len().min(1)).then(|| edges[..need].to_vec());
    }
    let mut cur = Vec::with_capacity(need);
    rec(edges, k as u32, need, &mut cur).then_some(cur)
}

/// Whether `edges` contains `need` pairwise disjoint members.
pub fn has_matching_of_size(edges: &[u64], k: usize, need: usize) -> bool {
    find_matching_of_size(edges, k, need).is_some()
}

/// ν(F) and a maximum matching.
pub fn matching_number(family: &Family) -> (usize, Vec<Edge>) {
    let m = max_matching_masks(&family.masks(), family.k());
    (m.len(), m.into_iter().map(VertexSet::from_mask).collect())
}

/// τ(F) and a minimum cover. The empty family has τ = 0.
pub fn covering_number(family: &Family) -> Result<(usize, VertexSet)> {
    if family.is_empty() {
        return Ok((0, VertexSet::EMPTY));
    }
    if family.k() == 0 {
        return Err(Error::arg("the empty edge cannot be covered"));
    }
    let edges = family.masks();
    let mut best = support(&greedy_matching(&edges));

    fn rec(edges: &[u64], cover: u64, best: &mut u64) {
        let mut uncovered = edges.iter().copied().filter(|&e| e & cover == 0);
        let Some(first) = uncovered.next() else {
            if cover.count_ones() < best.count_ones() {
                *best = cover;
            }
            return;
        };
        // disjoint uncovered edges each need their own cover vertex
        let mut used = first;
        let mut lb = 1u32;
        for e in uncovered {
            if e & used == 0 {
                used |= e;
                lb += 1;
            }
        }
        if cover.count_ones() + lb >= best.count_ones() {
            return;
        }
        let mut bits = first;
        while bits != 0 {
            let v = bits & bits.wrapping_neg();
            rec(edges, cover | v, best);
            bits &= bits - 1;
        }
    }
    rec(&edges, 0, &mut best);
    Ok((best.count_ones() as usize, VertexSet::from_mask(best)))
}

/// ω(F) and a maximum clique, grown level by level from the edges.
///
/// A clique `Q` of size `j + 1` is produced exactly once, from `Q` minus its
/// largest vertex. The empty family has ω = k − 1 with witness `[k − 1]`.
pub fn clique_number(family: &Family) -> Result<(usize, VertexSet)> {
    let k = family.k();
    if k == 0 {
        return Err(Error::arg("clique number needs k >= 1"));
    }
    if family.is_empty() {
        return Ok((k - 1, VertexSet::ground(k - 1)));
    }
    let members: HashSet<u64> = family.iter().map(|e| e.mask()).collect();
    let n = family.n();
    let mut frontier: Vec<VertexSet> = family.iter().collect();
    let mut size = k;
    loop {
        let mut next = Vec::new();
        for &c in &frontier {
            let top = c.max().unwrap_or(0);
            for v in top + 1..=n {
                let extends = c
                    .subsets_of_size(k - 1)
                    .all(|t| members.contains(&t.insert(v).mask()));
                if extends {
                    next.push(c.insert(v));
                }
            }
        }
        if next.is_empty() {
            return Ok((size, frontier[0]));
        }
        frontier = next;
        size += 1;
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionProfile {
    pub intersecting: bool,
    pub t_intersecting: bool,
    pub cross_intersecting: bool,
}

/// Whether every two distinct members of `edges` share at least `t` vertices.
pub fn is_t_intersecting(family: &Family, t: usize) -> bool {
    let edges = family.masks();
    edges.iter().enumerate().all(|(i, &a)| {
        edges[i + 1..].iter().all(|&b| (a & b).count_ones() as usize >= t)
    })
}

pub fn is_cross_intersecting(f: &Family, g: &Family) -> bool {
    f.iter().all(|a| g.iter().all(|b| !a.is_disjoint(b)))
}

pub fn intersection_predicates(f: &Family, g: &Family, t: usize) -> Result<IntersectionProfile> {
    f.same_ground(g)?;
    Ok(IntersectionProfile {
        intersecting: is_t_intersecting(f, 1),
        t_intersecting: is_t_intersecting(f, t),
        cross_intersecting: is_cross_intersecting(f, g),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, k: usize, lists: &[&[usize]]) -> Family {
        let lists: Vec<Vec<usize>> = lists.iter().map(|l| l.to_vec()).collect();
        Family::from_vertex_lists(n, k, &lists).unwrap()
    }

    fn star_of_two(n: usize) -> Family {
        Family::from_predicate(n, 2, |e| e.contains(1) || e.contains(2)).unwrap()
    }

    #[test]
    fn matching_examples() {
        let f = fam(6, 2, &[&[1, 2], &[3, 4], &[5, 6]]);
        assert_eq!(matching_number(&f).0, 3);
        assert_eq!(matching_number(&star_of_two(6)).0, 2);
        assert_eq!(matching_number(&Family::empty(5, 2).unwrap()).0, 0);
    }

    #[test]
    fn matching_witness_is_disjoint() {
        let f = Family::from_predicate(9, 3, |e| e.mask() % 3 != 0).unwrap();
        let (nu, w) = matching_number(&f);
        assert_eq!(w.len(), nu);
        assert_eq!(nu, 3);
        for (i, a) in w.iter().enumerate() {
            assert!(f.contains(*a));
            for b in &w[i + 1..] {
                assert!(a.is_disjoint(*b));
            }
        }
    }

    #[test]
    fn covering_examples() {
        let (tau, cover) = covering_number(&star_of_two(6)).unwrap();
        assert_eq!((tau, cover.to_vec()), (2, vec![1, 2]));
        assert_eq!(covering_number(&fam(5, 3, &[&[1, 2, 3]])).unwrap().0, 1);
        assert_eq!(covering_number(&Family::empty(5, 3).unwrap()).unwrap().0, 0);
        // triangle: two vertices needed
        assert_eq!(covering_number(&fam(3, 2, &[&[1, 2], &[1, 3], &[2, 3]])).unwrap().0, 2);
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&star_of_two(6)).unwrap().0, 3);
        let (w, q) = clique_number(&Family::empty(6, 3).unwrap()).unwrap();
        assert_eq!((w, q.to_vec()), (2, vec![1, 2]));
        let single = fam(5, 3, &[&[2, 4, 5]]);
        assert_eq!(clique_number(&single).unwrap(), (3, VertexSet::from_vertices([2, 4, 5]).unwrap()));
        let k5 = Family::complete_on(7, 2, VertexSet::interval(3, 7)).unwrap();
        assert_eq!(clique_number(&k5).unwrap().1.to_vec(), vec![3, 4, 5, 6, 7]);
    }

    #[test]
    fn intersection_examples() {
        let tri = fam(3, 2, &[&[1, 2], &[1, 3], &[2, 3]]);
        let p = intersection_predicates(&tri, &tri, 1).unwrap();
        assert!(p.intersecting && p.t_intersecting);
        assert!(!intersection_predicates(&tri, &tri, 2).unwrap().t_intersecting);

        let e = star_of_two(6);
        let g = fam(6, 2, &[&[1, 2]]);
        assert!(intersection_predicates(&e, &g, 1).unwrap().cross_intersecting);

        let two = fam(4, 2, &[&[1, 2], &[3, 4]]);
        assert!(!intersection_predicates(&two, &two, 1).unwrap().intersecting);
        assert!(intersection_predicates(&two, &fam(5, 2, &[]), 1).is_err());
    }

    #[test]
    fn has_matching_agrees_with_max() {
        let f = Family::from_predicate(8, 2, |e| e.mask().count_ones() == 2 && e.mask() % 5 != 1).unwrap();
        let nu = matching_number(&f).0;
        let masks = f.masks();
        assert!(has_matching_of_size(&masks, 2, nu));
        assert!(!has_matching_of_size(&masks, 2, nu + 1));
        let m = find_matching_of_size(&masks, 2, nu).unwrap();
        assert_eq!(m.iter().fold(0u64, |a, &e| a | e).count_ones() as usize, 2 * nu);
    }
}
