//! Seeded generators for the randomized property suites.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::family_core::{has_matching_of_size, k_subsets, precedes, Family};

pub type SuiteRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SuiteRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent inclusion of each k-set with a density drawn per family.
pub fn random_family<R: Rng>(rng: &mut R, n: usize, k: usize) -> Family {
    let density: f64 = rng.gen_range(0.05..0.6);
    let edges: Vec<_> = k_subsets(n, k).filter(|_| rng.gen_bool(density)).collect();
    Family::from_edges(n, k, edges).expect("generated edges are valid")
}

/// A uniformly shuffled list of all k-subsets of `[n]`.
pub fn shuffled_k_sets<R: Rng>(rng: &mut R, n: usize, k: usize) -> Vec<crate::Edge> {
    let mut all: Vec<_> = k_subsets(n, k).collect();
    all.shuffle(rng);
    all
}

/// A random shifted family: the down-set of one to four random k-sets under `≺`.
pub fn random_shifted_family<R: Rng>(rng: &mut R, n: usize, k: usize) -> Family {
    let all: Vec<_> = k_subsets(n, k).collect();
    let count = rng.gen_range(1..=4);
    let tops: Vec<_> = (0..count).map(|_| all[rng.gen_range(0..all.len())]).collect();
    Family::from_predicate(n, k, |e| tops.iter().any(|&t| precedes(e, t).unwrap_or(false)))
        .expect("generated edges are valid")
}

/// A random family with `ν ≤ s`: k-sets are offered in random order and kept
/// when they do not create an `(s+1)`-matching, up to a random target size.
pub fn random_bounded_matching<R: Rng>(rng: &mut R, n: usize, k: usize, s: usize) -> Family {
    let order = shuffled_k_sets(rng, n, k);
    let target = rng.gen_range(0..=order.len());
    let mut kept: Vec<u64> = Vec::new();
    for e in order {
        if kept.len() >= target {
            break;
        }
        kept.push(e.mask());
        if has_matching_of_size(&kept, k, s + 1) {
            kept.pop();
        }
    }
    Family::from_edges(n, k, kept.into_iter().map(crate::VertexSet::from_mask))
        .expect("generated edges are valid")
}
