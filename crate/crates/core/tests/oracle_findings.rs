//! Oracle values at small n that the closed forms do not predict, frozen
//! together with independently checkable witnesses.

use num_bigint::BigInt;

use extremal_core::family_core::{clique_number, is_shifted, matching_number, Family, VertexSet};
use extremal_core::formulas::{conjecture_rhs, m_closed, m_star_closed, size_a};
use extremal_core::oracle::{exact_m, exact_m_star, satisfies, Mode, SearchProblem};

/// `{T : |T ∩ [5]| ≥ 2}` on `[n]`: ν = 2, ω = 6, size `10 + 10(n − 5)`.
fn two_of_five(n: usize) -> Family {
    let core = VertexSet::ground(5);
    Family::from_predicate(n, 3, |e| e.intersection(core).len() >= 2).unwrap()
}

#[test]
fn conjectured_value_is_exceeded_for_triples_at_small_n() {
    for n in 10..=16 {
        let f = two_of_five(n);
        assert_eq!(f.len(), 10 + 10 * (n - 5));
        assert_eq!(matching_number(&f).0, 2);
        assert_eq!(clique_number(&f).unwrap().0, 6);
        let problem = SearchProblem::new(n, 6, 3, 2, Mode::M);
        let r = exact_m(&problem).unwrap();
        assert!(r.proven_optimal);
        assert_eq!(r.value, f.len(), "m({n},6,3,2)");
        satisfies(&problem, &r.witness).unwrap();
        let conj = conjecture_rhs(n, 6, 3, 2).unwrap();
        assert!(BigInt::from(r.value) > conj, "n={n}: {} vs {conj}", r.value);
        // the closed form falls back to the conjecture and says so
        let closed = m_closed(n, 6, 3, 2).unwrap();
        assert!(!closed.hypotheses_met);
        assert_eq!(closed.value, conj);
    }
    // from n = 17 on the conjectured value is attained again
    let r = exact_m(&SearchProblem::new(17, 6, 3, 2, Mode::M)).unwrap();
    assert_eq!(BigInt::from(r.value), conjecture_rhs(17, 6, 3, 2).unwrap());
}

#[test]
fn conjecture_holds_on_the_other_small_triple_cells() {
    for (n, q, expected) in [(9, 5, 56), (10, 7, 56), (11, 7, 59), (12, 5, 80), (13, 7, 71)] {
        let r = exact_m(&SearchProblem::new(n, q, 3, 2, Mode::M)).unwrap();
        assert!(r.proven_optimal);
        assert_eq!(r.value, expected, "m({n},{q},3,2)");
        assert_eq!(conjecture_rhs(n, q, 3, 2).unwrap(), BigInt::from(expected));
    }
}

#[test]
fn shifted_optimum_beats_the_clique_augmented_family_below_the_large_n_regime() {
    let problem = SearchProblem::new(12, 7, 4, 2, Mode::MStar);
    let r = exact_m_star(&problem).unwrap();
    assert!(r.proven_optimal);
    assert_eq!(r.value, 299);
    satisfies(&problem, &r.witness).unwrap();
    assert!(is_shifted(&r.witness));
    assert_eq!(size_a(12, 7, 4, 2).unwrap(), BigInt::from(230));
    assert!(!m_star_closed(12, 7, 4, 2).unwrap().hypotheses_met);
}

#[test]
fn shifted_optima_for_triples() {
    for (n, q, s, expected) in [(12, 8, 3, 155), (13, 6, 3, 146), (14, 8, 3, 182)] {
        let r = exact_m_star(&SearchProblem::new(n, q, 3, s, Mode::MStar)).unwrap();
        assert!(r.proven_optimal);
        assert_eq!(r.value, expected, "m*({n},{q},3,{s})");
    }
}
