//! Worker-parallel searches return the single-threaded value.

use extremal_core::oracle::{exact_m, exact_m_star, satisfies, Mode, SearchProblem};

const CELLS: [(usize, usize, usize, usize); 6] =
    [(9, 4, 2, 2), (10, 5, 3, 2), (11, 6, 3, 2), (12, 8, 3, 3), (10, 6, 4, 1), (9, 7, 3, 2)];

#[test]
fn parallel_and_sequential_agree() {
    for (n, q, k, s) in CELLS {
        for mode in [Mode::M, Mode::MStar] {
            let base = SearchProblem::new(n, q, k, s, mode);
            let run = |p: &SearchProblem| match mode {
                Mode::M => exact_m(p).unwrap(),
                Mode::MStar => exact_m_star(p).unwrap(),
            };
            let reference = run(&base);
            assert!(reference.proven_optimal);
            for threads in [Some(2), Some(4), None] {
                let p = base.clone().with_threads(threads);
                let r = run(&p);
                assert!(r.proven_optimal);
                assert_eq!(r.value, reference.value, "{mode:?} ({n},{q},{k},{s}) with {threads:?}");
                if r.value > 0 {
                    satisfies(&p, &r.witness).unwrap();
                }
            }
        }
    }
}
