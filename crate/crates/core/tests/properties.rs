//! Randomized and exhaustive properties of the family toolkit.

use proptest::prelude::*;

use extremal_core::family_core::json::{from_json, to_json};
use extremal_core::family_core::{
    binomial_u128, clique_number, covering_number, is_cross_intersecting, is_shifted, k_subsets,
    lex_family, matching_number, precedes, shadow, shift_closure, shift_ij, Family, VertexSet,
};
use extremal_core::Construction;

fn family_from_bits(n: usize, k: usize, bits: &[bool]) -> Family {
    let edges = k_subsets(n, k).zip(bits).filter(|(_, &b)| b).map(|(e, _)| e);
    Family::from_edges(n, k, edges).unwrap()
}

fn any_family(n_max: usize, k_max: usize) -> impl Strategy<Value = Family> {
    (2..=n_max)
        .prop_flat_map(move |n| (Just(n), 1..=n.min(k_max)))
        .prop_flat_map(|(n, k)| {
            let size = binomial_u128(n, k).unwrap() as usize;
            (Just(n), Just(k), prop::collection::vec(any::<bool>(), size))
        })
        .prop_map(|(n, k, bits)| family_from_bits(n, k, &bits))
}

/// The down-set of a few random k-sets.
fn shifted_family(n_max: usize, k_max: usize) -> impl Strategy<Value = Family> {
    (2..=n_max)
        .prop_flat_map(move |n| (Just(n), 1..=n.min(k_max)))
        .prop_flat_map(|(n, k)| {
            let size = binomial_u128(n, k).unwrap() as usize;
            (Just(n), Just(k), prop::collection::vec(0..size, 0..4))
        })
        .prop_map(|(n, k, picks)| {
            let all: Vec<_> = k_subsets(n, k).collect();
            let tops: Vec<_> = picks.iter().map(|&i| all[i]).collect();
            Family::from_predicate(n, k, |e| tops.iter().any(|&t| precedes(e, t).unwrap())).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn shifting_keeps_size_and_moves_invariants_the_right_way(f in any_family(8, 4)) {
        let (nu, _) = matching_number(&f);
        let (omega, _) = clique_number(&f).unwrap();
        for j in 2..=f.n() {
            for i in 1..j {
                let g = shift_ij(&f, i, j).unwrap();
                prop_assert_eq!(g.len(), f.len());
                prop_assert!(matching_number(&g).0 <= nu);
                prop_assert!(clique_number(&g).unwrap().0 >= omega);
            }
        }
    }

    #[test]
    fn closure_is_shifted_and_idempotent(f in any_family(9, 4)) {
        let c = shift_closure(&f);
        prop_assert!(is_shifted(&c));
        prop_assert_eq!(c.len(), f.len());
        prop_assert_eq!(shift_closure(&c), c.clone());
        if is_shifted(&f) {
            prop_assert_eq!(c, f);
        }
    }

    #[test]
    fn shadows_compose(f in any_family(8, 4)) {
        prop_assume!(f.k() >= 3);
        let once = shadow(&shadow(&f, 1).unwrap(), 1).unwrap();
        prop_assert_eq!(once, shadow(&f, 2).unwrap());
    }

    #[test]
    fn certificates_are_valid_and_nu_tau_bounds_hold(f in any_family(8, 3)) {
        let k = f.k();
        let (nu, matching) = matching_number(&f);
        let (tau, cover) = covering_number(&f).unwrap();
        let (omega, clique) = clique_number(&f).unwrap();
        prop_assert_eq!(matching.len(), nu);
        prop_assert!(matching.iter().all(|&e| f.contains(e)));
        for (i, a) in matching.iter().enumerate() {
            prop_assert!(matching[i + 1..].iter().all(|b| a.is_disjoint(*b)));
        }
        prop_assert_eq!(cover.len(), tau);
        prop_assert!(f.iter().all(|e| !e.is_disjoint(cover)));
        prop_assert_eq!(clique.len(), omega);
        prop_assert!(clique.subsets_of_size(k).all(|e| f.contains(e)));
        prop_assert!(nu <= tau && tau <= k * nu);
    }

    #[test]
    fn shifted_clique_number_is_read_off_one_edge(f in shifted_family(9, 4)) {
        let k = f.k();
        let (omega, _) = clique_number(&f).unwrap();
        for q in k..=f.n() {
            let probe = VertexSet::interval(q - k + 1, q);
            prop_assert_eq!(omega >= q, f.contains(probe), "q={}", q);
        }
    }

    #[test]
    fn json_round_trips(f in any_family(10, 4)) {
        prop_assert_eq!(from_json(&to_json(&f)).unwrap(), f);
    }

    #[test]
    fn lex_segments_stay_cross_intersecting(
        n in 4usize..=8,
        a in 1usize..=3,
        b in 1usize..=3,
        seed_a in prop::collection::vec(any::<bool>(), 56),
        seed_b in prop::collection::vec(any::<bool>(), 56),
    ) {
        prop_assume!(a + b <= n);
        let fa = family_from_bits(n, a, &seed_a);
        let candidates: Vec<_> = k_subsets(n, b).filter(|x| fa.iter().all(|y| !x.is_disjoint(y))).collect();
        let picked = candidates.iter().zip(&seed_b).filter(|(_, &keep)| keep).map(|(e, _)| *e);
        let fb = Family::from_edges(n, b, picked).unwrap();
        prop_assert!(is_cross_intersecting(&fa, &fb));
        let la = lex_family(n, a, fa.len()).unwrap();
        let lb = lex_family(n, b, fb.len()).unwrap();
        prop_assert!(is_cross_intersecting(&la, &lb));
    }
}

/// Shadow sizes of every family on `[n]` against the colex initial segment of
/// the same size.
fn kruskal_katona(n: usize, k: usize) {
    let edges: Vec<VertexSet> = k_subsets(n, k).collect();
    let lower: Vec<VertexSet> = k_subsets(n, k - 1).collect();
    let index = |s: VertexSet| lower.iter().position(|&x| x == s).unwrap();
    let shadow_bits: Vec<u64> = edges
        .iter()
        .map(|e| e.subsets_of_size(k - 1).fold(0u64, |acc, s| acc | 1 << index(s)))
        .collect();
    let mut least = vec![usize::MAX; edges.len() + 1];
    for family in 0u64..1 << edges.len() {
        let mut bits = 0u64;
        let mut rest = family;
        while rest != 0 {
            bits |= shadow_bits[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        let m = family.count_ones() as usize;
        least[m] = least[m].min(bits.count_ones() as usize);
    }
    for (m, &best) in least.iter().enumerate() {
        let segment = Family::from_edges(n, k, edges[..m].iter().copied()).unwrap();
        let size = if k == 1 { usize::from(m > 0) } else { shadow(&segment, 1).unwrap().len() };
        assert_eq!(size, best, "n={n}, k={k}, m={m}");
    }
}

#[test]
fn colex_segments_minimize_the_shadow() {
    for n in 3..=7 {
        kruskal_katona(n, 2);
    }
    for n in 4..=6 {
        kruskal_katona(n, 3);
    }
}

#[test]
fn named_constructions_have_their_invariants() {
    for n in 3..=10 {
        for k in 2..=4 {
            for q in k + 1..(2 * k).min(n + 1) {
                let l = Construction::L { n, k, q }.build().unwrap();
                assert_eq!(clique_number(&l).unwrap().0, q, "L({n},{k},{q})");
                assert!(is_shifted(&l));
            }
            for q in k..=n {
                let c = Construction::Clique { n, q, k }.build().unwrap();
                assert_eq!(matching_number(&c).0, q / k);
            }
            if n > k {
                let h = Construction::HM { n, k }.build().unwrap();
                assert_eq!(matching_number(&h).0, 1);
                if n >= 2 * k {
                    assert_eq!(covering_number(&h).unwrap().0, 2);
                }
            }
        }
        if n >= 3 {
            let t = Construction::T3 { n }.build().unwrap();
            assert_eq!(t.len(), 1 + 3 * (n - 3));
            assert_eq!(matching_number(&t).0, 1);
        }
    }
}

#[test]
fn lex_family_is_a_lex_initial_segment() {
    let f = lex_family(5, 2, 5).unwrap();
    let lists: Vec<Vec<usize>> = vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![1, 5], vec![2, 3]];
    assert_eq!(f, Family::from_vertex_lists(5, 2, &lists).unwrap());
}
