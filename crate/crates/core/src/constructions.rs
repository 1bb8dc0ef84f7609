//! Builders for the named extremal families.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family_core::{lex_family, Family, VertexSet};
use crate::formulas;

/// A named construction with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Construction {
    /// `E(n,k,s)`: edges meeting `[s]`.
    E { n: usize, k: usize, s: usize },
    /// `H(n,k)`: the Hilton–Milner family.
    HM { n: usize, k: usize },
    /// `T(n,3)`: triples with at least two elements in `[3]`.
    T3 { n: usize },
    /// `B(n,k,s)`: the extremal family with `ν = s < τ`.
    B { n: usize, k: usize, s: usize },
    /// `L(n,k,q)`: a `q`-clique plus a large intersecting part through 1.
    L { n: usize, k: usize, q: usize },
    /// `A(n,q,k,s)`: the clique-augmented family with matching number `s`.
    A { n: usize, q: usize, k: usize, s: usize },
    /// `C([q], k)` over ground set `[n]`.
    Clique { n: usize, q: usize, k: usize },
    /// First `m` k-sets of `[n]` in lexicographic order.
    Lex { n: usize, k: usize, m: usize },
    /// Cyclic intervals of length `l` along `sigma`, a permutation of `[m]`.
    Cyc { sigma: Vec<usize>, l: usize },
}

fn require(cond: bool, constraint: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Argument(constraint()))
    }
}

impl Construction {
    pub fn name(&self) -> &'static str {
        match self {
            Construction::E { .. } => "E",
            Construction::HM { .. } => "HM",
            Construction::T3 { .. } => "T3",
            Construction::B { .. } => "B",
            Construction::L { .. } => "L",
            Construction::A { .. } => "A",
            Construction::Clique { .. } => "CLIQUE",
            Construction::Lex { .. } => "LEX",
            Construction::Cyc { .. } => "CYC",
        }
    }

    pub fn build(&self) -> Result<Family> {
        match *self {
            Construction::E { n, k, s } => build_e(n, k, s),
            Construction::HM { n, k } => build_hm(n, k),
            Construction::T3 { n } => {
                require(n >= 3, || format!("T3 requires n >= 3 (got n={n})"))?;
                let core = VertexSet::ground(3);
                Family::from_predicate(n, 3, |e| e.intersection(core).len() >= 2)
            }
            Construction::B { n, k, s } => build_b(n, k, s),
            Construction::L { n, k, q } => build_l(n, k, q),
            Construction::A { n, q, k, s } => build_a(n, q, k, s),
            Construction::Clique { n, q, k } => {
                require(k <= q && q <= n, || format!("CLIQUE requires k <= q <= n (got k={k}, q={q}, n={n})"))?;
                Family::complete_on(n, k, VertexSet::ground(q))
            }
            Construction::Lex { n, k, m } => lex_family(n, k, m),
            Construction::Cyc { ref sigma, l } => cyclic_intervals(sigma, l),
        }
    }
}

fn build_e(n: usize, k: usize, s: usize) -> Result<Family> {
    require(k >= 1 && s >= 1, || format!("E requires k >= 1 and s >= 1 (got k={k}, s={s})"))?;
    require(n >= s + k - 1 && n >= k, || format!("E requires n >= s+k-1 (got n={n})"))?;
    let star = VertexSet::ground(s);
    Family::from_predicate(n, k, |e| !e.is_disjoint(star))
}

fn build_hm(n: usize, k: usize) -> Result<Family> {
    require(k >= 2, || format!("HM requires k >= 2 (got k={k})"))?;
    require(n > k, || format!("HM requires n >= k+1 (got n={n})"))?;
    let block = VertexSet::interval(2, k + 1);
    let mut fam = Family::from_predicate(n, k, |e| e.contains(1) && !e.is_disjoint(block))?;
    fam.insert(block)?;
    Ok(fam)
}

fn build_b(n: usize, k: usize, s: usize) -> Result<Family> {
    require(k >= 2 && s >= 1, || format!("B requires k >= 2 and s >= 1 (got k={k}, s={s})"))?;
    require(n >= s + k && n >= s * k, || {
        format!("B requires n >= max(s+k, sk) = {} (got n={n})", (s + k).max(s * k))
    })?;
    let stars = VertexSet::ground(s - 1);
    let block = VertexSet::interval(s + 1, s + k);
    let tail = VertexSet::interval(s, n);
    let mut fam = Family::from_predicate(n, k, |e| {
        !e.is_disjoint(stars) || (e.is_subset(tail) && e.contains(s) && !e.is_disjoint(block))
    })?;
    fam.insert(block)?;
    Ok(fam)
}

fn build_l(n: usize, k: usize, q: usize) -> Result<Family> {
    require(k < q && q < 2 * k, || format!("L requires k < q < 2k (got k={k}, q={q})"))?;
    require(n >= q, || format!("L requires n >= q (got n={n}, q={q})"))?;
    let clique = VertexSet::ground(q);
    Family::from_predicate(n, k, |e| {
        e.is_subset(clique) || (e.contains(1) && e.intersection(clique).len() > q - k)
    })
}

/// The three-case definition of `A(n,q,k,s)`, checked against the closed
/// form for its size.
fn build_a(n: usize, q: usize, k: usize, s: usize) -> Result<Family> {
    require(k >= 2 && s >= 1, || format!("A requires k >= 2 and s >= 1 (got k={k}, s={s})"))?;
    require(s + k - 1 <= q && q < s * k + k, || {
        format!("A requires s+k-1 <= q <= sk+k-1 (got q={q}, range [{}, {}])", s + k - 1, s * k + k - 1)
    })?;
    require(n >= q, || format!("A requires n >= q (got n={n}, q={q})"))?;
    let clique = VertexSet::ground(q);
    let fam = if q == s + k - 1 {
        build_e(n, k, s)?
    } else if q > s * k {
        let r = q - s * k;
        let rest = VertexSet::interval(2, q);
        Family::from_predicate(n, k, |e| {
            e.is_subset(clique) || (e.contains(1) && e.intersection(rest).len() >= r)
        })?
    } else {
        let (p, r) = formulas::derive_pr(q, k, s)?;
        let head = VertexSet::ground(p);
        let upper = VertexSet::interval(p + 1, n);
        let rest = VertexSet::interval(p + 2, q);
        Family::from_predicate(n, k, |e| {
            e.is_subset(clique)
                || (e.is_subset(upper) && e.contains(p + 1) && e.intersection(rest).len() >= r)
                || !e.is_disjoint(head)
        })?
    };
    let expected = formulas::size_a(n, q, k, s)?;
    if num_bigint::BigInt::from(fam.len()) != expected {
        return Err(Error::Internal(format!(
            "A({n},{q},{k},{s}) has {} edges but the closed form gives {expected}",
            fam.len()
        )));
    }
    Ok(fam)
}

/// The `m` cyclic intervals `{x_i, …, x_{i+l−1}}` (indices mod `m`) along `sigma`.
pub fn cyclic_intervals(sigma: &[usize], l: usize) -> Result<Family> {
    let m = sigma.len();
    require(l >= 1 && l < m, || format!("cyclic intervals need 1 <= l < m (got l={l}, m={m})"))?;
    let as_set = VertexSet::from_vertices(sigma.iter().copied())?;
    require(as_set == VertexSet::ground(m), || format!("sigma must be a permutation of [{m}]"))?;
    let edges = (0..m).map(|i| {
        (0..l).fold(VertexSet::EMPTY, |acc, j| acc.insert(sigma[(i + j) % m]))
    });
    Family::from_edges(m, l, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family_core::{clique_number, covering_number, matching_number};

    fn lists(f: &Family) -> Vec<Vec<usize>> {
        f.iter().map(|e| e.to_vec()).collect()
    }

    #[test]
    fn e_example() {
        let e = Construction::E { n: 6, k: 2, s: 2 }.build().unwrap();
        assert_eq!(e.len(), 9);
        assert_eq!(matching_number(&e).0, 2);
        assert_eq!(covering_number(&e).unwrap().0, 2);
        assert_eq!(clique_number(&e).unwrap().0, 3);
    }

    #[test]
    fn hm_t3_sizes() {
        assert_eq!(Construction::HM { n: 7, k: 3 }.build().unwrap().len(), 13);
        assert_eq!(Construction::HM { n: 6, k: 2 }.build().unwrap().len(), 3);
        assert_eq!(Construction::T3 { n: 6 }.build().unwrap().len(), 10);
    }

    #[test]
    fn a_example() {
        let a = Construction::A { n: 10, q: 7, k: 3, s: 2 }.build().unwrap();
        assert_eq!(a.len(), 53);
        assert_eq!(matching_number(&a).0, 2);
        assert_eq!(clique_number(&a).unwrap().0, 7);
    }

    #[test]
    fn a_bottom_equals_e() {
        let a = Construction::A { n: 9, q: 4, k: 3, s: 2 }.build().unwrap();
        assert_eq!(a, Construction::E { n: 9, k: 3, s: 2 }.build().unwrap());
    }

    #[test]
    fn b_example() {
        let b = Construction::B { n: 8, k: 2, s: 2 }.build().unwrap();
        assert_eq!(matching_number(&b).0, 2);
        assert_eq!(covering_number(&b).unwrap().0, 3);
        assert_eq!(clique_number(&b).unwrap().0, 4);
    }

    #[test]
    fn range_errors_name_the_constraint() {
        let err = Construction::A { n: 10, q: 9, k: 3, s: 2 }.build().unwrap_err();
        assert!(err.to_string().contains("s+k-1 <= q <= sk+k-1"));
        assert!(Construction::L { n: 10, k: 3, q: 6 }.build().is_err());
        assert!(Construction::A { n: 6, q: 7, k: 3, s: 2 }.build().is_err());
        assert!(Construction::Clique { n: 4, q: 5, k: 2 }.build().is_err());
    }

    #[test]
    fn cyclic_examples() {
        let c = cyclic_intervals(&[1, 2, 3, 4], 2).unwrap();
        assert_eq!(lists(&c), vec![vec![1, 2], vec![2, 3], vec![1, 4], vec![3, 4]]);
        assert_eq!(cyclic_intervals(&[1, 2, 3, 4, 5], 1).unwrap().len(), 5);
        let c = cyclic_intervals(&[1, 3, 5, 2, 4], 2).unwrap();
        let expect = Family::from_vertex_lists(
            5,
            2,
            &[vec![1, 3], vec![3, 5], vec![2, 5], vec![2, 4], vec![1, 4]],
        )
        .unwrap();
        assert_eq!(c, expect);
        assert!(cyclic_intervals(&[1, 2, 3], 3).is_err());
        assert!(cyclic_intervals(&[1, 2, 2], 1).is_err());
        assert!(cyclic_intervals(&[1, 2, 4], 1).is_err());
    }
}
