//! Exact `m(n,q,k,s)` and `m*(n,q,k,s)` by branch-and-bound over shifted families.
//!
//! Shifted families are exactly the down-sets of `(C([n],k), ≺)`. The search
//! walks the k-sets in colex order (a linear extension of `≺`), deciding each
//! undecided edge with the include branch first. Including an edge keeps the
//! current family down-closed; excluding it excludes its whole up-cone. For
//! shifted families `ω ≥ q` holds iff `{q−k+1, …, q}` is present, so clique
//! constraints become edges forced in or out at the root.

mod search;

use std::time::Duration;

use serde::Serialize;

use crate::constructions::Construction;
use crate::error::{Error, Result};
use crate::family_core::{clique_number, is_shifted, matching_number, Family};

pub use search::MAX_ORACLE_EDGES;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mode {
    /// Shifted, `ν = s` and `ω = q` exactly.
    #[serde(rename = "mstar")]
    MStar,
    /// `ν ≤ s` and `ω ≥ q`.
    #[serde(rename = "m")]
    M,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { node_limit: 100_000_000, time_limit: Duration::from_secs(600) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchProblem {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub q: usize,
    pub mode: Mode,
    pub budget: Budget,
    /// Worker count; `None` uses every available thread, `Some(1)` runs the
    /// reference single-threaded search.
    pub threads: Option<usize>,
}

impl SearchProblem {
    pub fn new(n: usize, q: usize, k: usize, s: usize, mode: Mode) -> Self {
        SearchProblem { n, k, s, q, mode, budget: Budget::default(), threads: Some(1) }
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_threads(mut self, threads: Option<usize>) -> Self {
        self.threads = threads;
        self
    }

    fn validate(&self) -> Result<()> {
        crate::family_core::check_capacity(self.n)?;
        if self.k == 0 || self.s == 0 {
            return Err(Error::arg(format!("need k >= 1 and s >= 1 (got k={}, s={})", self.k, self.s)));
        }
        if self.k > self.n {
            return Err(Error::arg(format!("k={} exceeds n={}", self.k, self.n)));
        }
        if self.q < self.k {
            return Err(Error::arg(format!("q={} must be at least k={}", self.q, self.k)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub value: usize,
    pub witness: Family,
    pub nodes_explored: u64,
    pub proven_optimal: bool,
}

/// How `exact_m` reaches its answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MStrategy {
    /// One search with `ν ≤ s` and `{q−k+1, …, q}` forced in.
    Direct,
    /// `max_{q ≤ t < (s+1)k} m*(n, t, k, s)`.
    ViaMStar,
}

fn infeasible(problem: &SearchProblem) -> Result<SearchResult> {
    Ok(SearchResult {
        value: 0,
        witness: Family::empty(problem.n, problem.k)?,
        nodes_explored: 0,
        proven_optimal: true,
    })
}

/// Best construction known to satisfy the constraints, used as the initial incumbent.
fn seed_family(problem: &SearchProblem) -> Option<Family> {
    let SearchProblem { n, k, s, q, mode, .. } = *problem;
    if k < 2 {
        return None;
    }
    let top = s * k + k - 1;
    let targets: Vec<usize> = match mode {
        Mode::MStar => vec![q],
        Mode::M => (q..=top).collect(),
    };
    let mut candidates: Vec<Family> = targets
        .into_iter()
        .filter(|&t| t + 1 >= s + k && t <= top && t <= n)
        .filter_map(|t| Construction::A { n, q: t, k, s }.build().ok())
        .collect();
    if mode == Mode::M && q <= top && top <= n {
        if let Ok(c) = (Construction::Clique { n, q: top, k }).build() {
            candidates.push(c);
        }
    }
    candidates
        .into_iter()
        .filter(|f| satisfies(problem, f).is_ok())
        .max_by_key(|f| f.len())
}

/// Independent re-check of a witness against the mode's constraints.
pub fn satisfies(problem: &SearchProblem, family: &Family) -> Result<()> {
    if family.is_empty() {
        return Ok(());
    }
    if !is_shifted(family) {
        return Err(Error::Internal("witness is not shifted".into()));
    }
    let nu = matching_number(family).0;
    let omega = clique_number(family)?.0;
    let ok = match problem.mode {
        Mode::MStar => nu == problem.s && omega == problem.q,
        Mode::M => nu <= problem.s && omega >= problem.q,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "witness has nu={nu}, omega={omega}, violating {:?} with s={}, q={}",
            problem.mode, problem.s, problem.q
        )))
    }
}

fn run(problem: &SearchProblem) -> Result<SearchResult> {
    problem.validate()?;
    let SearchProblem { n, k, s, q, .. } = *problem;
    if q > n || (problem.mode == Mode::M && q >= (s + 1) * k) {
        return infeasible(problem);
    }
    let seed = seed_family(problem);
    let result = search::solve(problem, seed)?;
    if result.value > 0 {
        satisfies(problem, &result.witness)?;
    }
    if result.witness.len() != result.value {
        return Err(Error::Internal("witness size disagrees with reported value".into()));
    }
    Ok(result)
}

/// Exact `m*(n, q, k, s)`: the largest shifted family with `ν = s` and `ω = q`.
/// Infeasible cells report value 0 with an empty witness.
pub fn exact_m_star(problem: &SearchProblem) -> Result<SearchResult> {
    if problem.mode != Mode::MStar {
        return Err(Error::arg("exact_m_star needs mode mstar"));
    }
    run(problem)
}

/// Exact `m(n, q, k, s)` by a direct search.
pub fn exact_m(problem: &SearchProblem) -> Result<SearchResult> {
    exact_m_with(problem, MStrategy::Direct)
}

pub fn exact_m_with(problem: &SearchProblem, strategy: MStrategy) -> Result<SearchResult> {
    if problem.mode != Mode::M {
        return Err(Error::arg("exact_m needs mode m"));
    }
    match strategy {
        MStrategy::Direct => run(problem),
        MStrategy::ViaMStar => via_m_star(problem),
    }
}

fn via_m_star(problem: &SearchProblem) -> Result<SearchResult> {
    problem.validate()?;
    let SearchProblem { n, k, s, q, .. } = *problem;
    let started = std::time::Instant::now();
    let mut best = SearchResult {
        value: 0,
        witness: Family::empty(n, k)?,
        nodes_explored: 0,
        proven_optimal: true,
    };
    for t in q..(s + 1) * k {
        if t > n {
            break;
        }
        let spent = started.elapsed();
        let remaining_nodes = problem.budget.node_limit.saturating_sub(best.nodes_explored);
        let budget = Budget {
            node_limit: remaining_nodes,
            time_limit: problem.budget.time_limit.saturating_sub(spent),
        };
        let sub = SearchProblem { q: t, mode: Mode::MStar, budget, ..problem.clone() };
        let r = run(&sub)?;
        best.nodes_explored += r.nodes_explored;
        best.proven_optimal &= r.proven_optimal;
        if r.value > best.value {
            best.value = r.value;
            best.witness = r.witness;
        }
    }
    Ok(best)
}
