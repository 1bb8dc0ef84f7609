//! Property suites and identity checks.
//!
//! Every suite returns a list of [`Check`]s, one per property, each carrying
//! the number of cases examined and the first few violations. Randomized
//! suites draw from a seeded ChaCha stream so that reports are reproducible.
//! Independent cases fan out through [`crate::par::map`] and are merged in
//! input order, so the parallel and sequential builds produce identical
//! reports.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use serde::Serialize;

use crate::constructions::{cyclic_intervals, Construction};
use crate::error::{Error, Result};
use crate::family_core::{
    clique_number, covering_number, is_cross_intersecting, is_shifted, is_t_intersecting,
    matching_number, restrict_avoid, shift_closure, shift_ij, Family, VertexSet,
};
use crate::formulas::{
    self, binom, conjecture_rhs, cross_bound, cross_term, derive_pr, hm_bound, m_closed,
    m_regimes, size_a, Regime,
};
use crate::oracle::{self, Budget, MStrategy, Mode, SearchProblem, SearchResult};
use crate::par;
use crate::random::{self, random_bounded_matching, random_family, random_shifted_family};

/// How many violation messages a check keeps.
const KEEP: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    /// An oracle call ran out of budget; nothing was contradicted.
    Inconclusive,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Fail => "FAIL",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one property over many cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub cases: u64,
    pub violations: u64,
    pub detail: String,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<12} {} ({} cases, {} violations)", self.status, self.name, self.cases, self.violations)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

/// Counts cases and keeps the first few violations.
#[derive(Clone, Debug, Default)]
struct Tally {
    cases: u64,
    violations: u64,
    inconclusive: u64,
    examples: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
            if self.examples.len() < KEEP {
                self.examples.push(message());
            }
        }
    }

    fn unresolved(&mut self, message: impl FnOnce() -> String) {
        self.cases += 1;
        self.inconclusive += 1;
        if self.examples.len() < KEEP {
            self.examples.push(message());
        }
    }

    fn note(&mut self, line: String) {
        self.notes.push(line);
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.violations += other.violations;
        self.inconclusive += other.inconclusive;
        for e in other.examples {
            if self.examples.len() < KEEP {
                self.examples.push(e);
            }
        }
        self.notes.extend(other.notes);
    }

    fn merged(parts: impl IntoIterator<Item = Tally>) -> Tally {
        let mut all = Tally::default();
        for p in parts {
            all.merge(p);
        }
        all
    }

    fn finish(self, name: &str) -> Check {
        let status = if self.violations > 0 {
            Status::Fail
        } else if self.inconclusive > 0 {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        let mut parts = self.notes;
        parts.extend(self.examples);
        Check {
            name: name.to_string(),
            status,
            cases: self.cases,
            violations: self.violations,
            detail: parts.join("; "),
        }
    }
}

fn fold_errors<T>(items: Vec<Result<T>>) -> Result<Vec<T>> {
    items.into_iter().collect()
}

// ---------------------------------------------------------------------------
// Suites

/// Named property suites runnable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Shifting,
    Constructions,
    Monotonicity,
    Cross,
    Cyclic,
    Conjecture,
    Regimes,
    Oracle,
    Trichotomy,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Shifting,
        Suite::Constructions,
        Suite::Monotonicity,
        Suite::Cross,
        Suite::Cyclic,
        Suite::Conjecture,
        Suite::Regimes,
        Suite::Oracle,
        Suite::Trichotomy,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Shifting => "shifting",
            Suite::Constructions => "constructions",
            Suite::Monotonicity => "monotonicity",
            Suite::Cross => "cross",
            Suite::Cyclic => "cyclic",
            Suite::Conjecture => "conjecture",
            Suite::Regimes => "regimes",
            Suite::Oracle => "oracle",
            Suite::Trichotomy => "trichotomy",
        }
    }

    pub fn parse(name: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|s| s.as_str() == name).ok_or_else(|| {
            let names: Vec<_> = Suite::ALL.iter().map(|s| s.as_str()).collect();
            Error::arg(format!("unknown suite '{name}' (expected one of {})", names.join(", ")))
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Knobs shared by the suites; unset fields take each suite's defaults.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub k: Option<usize>,
    pub s: Option<usize>,
    pub n_max: Option<usize>,
    pub budget: Budget,
    pub threads: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 0, k: None, s: None, n_max: None, budget: Budget::default(), threads: Some(1) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    /// Fail dominates inconclusive, which dominates pass.
    pub fn status(&self) -> Status {
        self.checks.iter().map(|c| c.status).max().unwrap_or(Status::Pass)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (seed {})", self.suite, self.seed)?;
        for c in &self.checks {
            writeln!(f, "  {c}")?;
        }
        write!(f, "{}", self.status())
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Shifting => shifting_suite(opts.seed, 500),
        Suite::Constructions => vec![construction_ledger(12, 4, 3)?],
        Suite::Monotonicity => vec![monotonicity_sweep(5, 5, opts.n_max.unwrap_or(200))?],
        Suite::Cross => {
            vec![cross_equality_pairs(12, 3, 3)?, cross_random_pairs(opts.seed, 1000)?]
        }
        Suite::Cyclic => vec![cyclic_interval_bounds(8)?],
        Suite::Conjecture => {
            let k = opts.k.unwrap_or(2);
            let s = opts.s.unwrap_or(2);
            let n_max = opts.n_max.unwrap_or((s + 1) * k + 3);
            vec![conjecture_grid(k, s, n_max, opts.budget, opts.threads)?]
        }
        Suite::Regimes => vec![
            pr_tiling(5, 5)?,
            small_n_spot_value()?,
            regime_consistency(4, 4)?,
            boundary_evidence(opts.budget, opts.threads)?,
        ],
        Suite::Oracle => vec![
            graph_case_grid(2, 6, 9, opts.budget, opts.threads)?,
            near_top_value(opts.budget, opts.threads)?,
            strategies_agree(opts.budget, opts.threads)?,
            m_star_in_q_table(opts.budget, opts.threads)?,
            shifting_loses_nothing(opts.seed, 200)?,
            recursion_grid(opts.budget, opts.threads)?,
        ],
        Suite::Trichotomy => vec![trichotomy_random(opts.seed, 1000, 9, 3)?],
    };
    Ok(SuiteReport { suite, seed: opts.seed, checks })
}

// ---------------------------------------------------------------------------
// Shifting

/// Which branches of the trichotomy hold for a shifted `family` with `ν ≤ s`:
/// `[F ⊆ E(n,k,s), s+k ≤ ω < sk+k−1, F = C([sk+k−1], k)]`.
pub fn trichotomy_branches(family: &Family, s: usize) -> Result<[bool; 3]> {
    let k = family.k();
    let star = VertexSet::ground(s.min(family.n()));
    let in_e = family.iter().all(|e| !e.is_disjoint(star));
    let (omega, _) = clique_number(family)?;
    let top = s * k + k - 1;
    let middle = s + k <= omega && omega < top;
    let full = top <= family.n() && {
        let clique = VertexSet::ground(top);
        BigInt::from(family.len()) == binom(top as i64, k as i64)
            && family.iter().all(|e| e.is_subset(clique))
    };
    Ok([in_e, middle, full])
}

/// The trichotomy holds: exactly one branch for `k ≥ 2`. For `k = 1` the first
/// and third branches coincide at `|F| = s`, so at least one is required.
pub fn trichotomy_holds(family: &Family, s: usize) -> Result<bool> {
    let branches = trichotomy_branches(family, s)?;
    let count = branches.iter().filter(|&&b| b).count();
    Ok(if family.k() >= 2 { count == 1 } else { count >= 1 })
}

fn trichotomy_tally(tally: &mut Tally, family: &Family, s: usize) -> Result<()> {
    let ok = trichotomy_holds(family, s)?;
    tally.check(ok, || {
        format!("trichotomy fails for s={s} on {}", crate::family_core::json::to_json(family))
    });
    Ok(())
}

fn shifting_case(seed: u64, index: u64) -> Result<[Tally; 4]> {
    let mut rng = random::rng(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(index));
    let n = rng.gen_range(2..=10);
    let k = rng.gen_range(1..=n.min(4));
    let family = random_family(&mut rng, n, k);
    let (nu, _) = matching_number(&family);
    let (omega, _) = clique_number(&family)?;
    let [mut sizes, mut monotone, mut closure, mut tri] = <[Tally; 4]>::default();
    for j in 2..=n {
        for i in 1..j {
            let shifted = shift_ij(&family, i, j)?;
            sizes.check(shifted.len() == family.len(), || {
                format!("S_{i}{j} changed size {} -> {} (n={n}, k={k})", family.len(), shifted.len())
            });
            let (nu2, _) = matching_number(&shifted);
            let (omega2, _) = clique_number(&shifted)?;
            monotone.check(nu2 <= nu && omega2 >= omega, || {
                format!("S_{i}{j}: nu {nu}->{nu2}, omega {omega}->{omega2} (n={n}, k={k})")
            });
        }
    }
    let closed = shift_closure(&family);
    let again = shift_closure(&closed);
    closure.check(again == closed && is_shifted(&closed) && closed.len() == family.len(), || {
        format!("closure not idempotent or not shifted (n={n}, k={k})")
    });
    let (nu_closed, _) = matching_number(&closed);
    for s in nu_closed.max(1)..=nu_closed + 1 {
        trichotomy_tally(&mut tri, &closed, s)?;
    }
    Ok([sizes, monotone, closure, tri])
}

/// Random families (`n ≤ 10`, `k ≤ 4`): every `S_ij` keeps the size, never
/// raises ν and never lowers ω; the closure is idempotent and shifted; the
/// trichotomy holds on the closure for `s ∈ {ν, ν+1}`.
pub fn shifting_suite(seed: u64, samples: u64) -> Vec<Check> {
    let results = par::map((0..samples).collect(), |i| shifting_case(seed, i));
    let mut parts: [Tally; 4] = Default::default();
    let mut error = None;
    for r in results {
        match r {
            Ok(t) => {
                for (acc, part) in parts.iter_mut().zip(t) {
                    acc.merge(part);
                }
            }
            Err(e) => error = Some(e.to_string()),
        }
    }
    if let Some(e) = error {
        parts[0].check(false, || format!("error: {e}"));
    }
    let names = [
        "S_ij preserves size",
        "S_ij never raises nu, never lowers omega",
        "shift_closure idempotent and shifted",
        "trichotomy on shifted samples",
    ];
    let [a, b, c, d] = parts;
    [a, b, c, d].into_iter().zip(names).map(|(t, name)| t.finish(name)).collect()
}

/// Trichotomy on random shifted families with `ν ≤ s`, `n ≤ n_max`, `k ≤ k_max`.
pub fn trichotomy_random(seed: u64, samples: u64, n_max: usize, k_max: usize) -> Result<Check> {
    let tallies = par::map((0..samples).collect(), |i| -> Result<Tally> {
        let mut rng = random::rng(seed ^ 0x7472_6963_686f_746f ^ i.wrapping_mul(0x2545_f491_4f6c_dd1d));
        let n = rng.gen_range(2..=n_max);
        let k = rng.gen_range(1..=k_max.min(n));
        let family = random_shifted_family(&mut rng, n, k);
        let (nu, _) = matching_number(&family);
        let s = rng.gen_range(nu.max(1)..=nu + 2);
        let mut t = Tally::default();
        trichotomy_tally(&mut t, &family, s)?;
        Ok(t)
    });
    Ok(Tally::merged(fold_errors(tallies)?).finish("trichotomy on random shifted families"))
}

// ---------------------------------------------------------------------------
// Constructions

fn ledger_cell(n: usize, k: usize, s_max: usize) -> Result<Tally> {
    let mut t = Tally::default();
    let c = |a: usize, b: usize| binom(a as i64, b as i64);
    for s in 1..=s_max {
        // The grid's valid cells: s disjoint edges fit into [n].
        if n < s * k {
            continue;
        }
        let e = Construction::E { n, k, s }.build()?;
        let (nu, _) = matching_number(&e);
        let (tau, _) = covering_number(&e)?;
        let (omega, _) = clique_number(&e)?;
        t.check(
            BigInt::from(e.len()) == c(n, k) - c(n - s, k) && nu == s && tau == s && omega == s + k - 1,
            || format!("E({n},{k},{s}): |E|={}, nu={nu}, tau={tau}, omega={omega}", e.len()),
        );
        if k < 2 {
            continue;
        }
        for q in s + k - 1..=(s * k + k - 1).min(n) {
            let a = Construction::A { n, q, k, s }.build()?;
            let (nu, _) = matching_number(&a);
            let (omega, _) = clique_number(&a)?;
            let size = size_a(n, q, k, s)?;
            t.check(
                BigInt::from(a.len()) == size && nu == s && omega == q && is_shifted(&a),
                || format!("A({n},{q},{k},{s}): |A|={} vs {size}, nu={nu}, omega={omega}", a.len()),
            );
        }
        if n >= s + k {
            let b = Construction::B { n, k, s }.build()?;
            let (omega, _) = clique_number(&b)?;
            let (tau, _) = covering_number(&b)?;
            t.check(omega == k + s && tau == s + 1, || {
                format!("B({n},{k},{s}): omega={omega}, tau={tau}")
            });
        }
    }
    if k >= 2 && n > 2 * k {
        let h = Construction::HM { n, k }.build()?;
        let (omega, _) = clique_number(&h)?;
        let bound = hm_bound(n, k)?;
        t.check(BigInt::from(h.len()) == bound && omega == k + 1, || {
            format!("HM({n},{k}): |H|={} vs {bound}, omega={omega}", h.len())
        });
    }
    for q in k + 1..(2 * k).min(n + 1) {
        let l = Construction::L { n, k, q }.build()?;
        let (omega, _) = clique_number(&l)?;
        t.check(omega == q, || format!("L({n},{k},{q}): omega={omega}"));
    }
    for q in k..=n {
        let cl = Construction::Clique { n, q, k }.build()?;
        let (nu, _) = matching_number(&cl);
        t.check(nu == q / k, || format!("CLIQUE({n},{q},{k}): nu={nu}"));
    }
    Ok(t)
}

/// Every named construction on the grid `n ≤ n_max`, `k ≤ k_max`, `s ≤ s_max`
/// has its documented size and invariants.
pub fn construction_ledger(n_max: usize, k_max: usize, s_max: usize) -> Result<Check> {
    let cells: Vec<(usize, usize)> =
        (1..=n_max).flat_map(|n| (1..=k_max.min(n)).map(move |k| (n, k))).collect();
    let tallies = par::map(cells, |(n, k)| ledger_cell(n, k, s_max));
    Ok(Tally::merged(fold_errors(tallies)?).finish("construction ledger"))
}

// ---------------------------------------------------------------------------
// Formulas

/// `size_A(n,q) ≥ size_A(n,q+1)` for `2 ≤ k ≤ k_max`, `s ≤ s_max`,
/// `s+k−1 ≤ q ≤ sk+k−2`, `2q ≤ n ≤ n_max`.
pub fn monotonicity_sweep(k_max: usize, s_max: usize, n_max: usize) -> Result<Check> {
    let cells: Vec<(usize, usize)> =
        (2..=k_max).flat_map(|k| (1..=s_max).map(move |s| (k, s))).collect();
    let tallies = par::map(cells, |(k, s)| -> Result<Tally> {
        let mut t = Tally::default();
        for q in s + k - 1..=s * k + k - 2 {
            for n in 2 * q..=n_max {
                let here = size_a(n, q, k, s)?;
                let next = size_a(n, q + 1, k, s)?;
                t.check(here >= next, || format!("size_A({n},{q},{k},{s})={here} < size_A(q+1)={next}"));
            }
        }
        Ok(t)
    });
    Ok(Tally::merged(fold_errors(tallies)?).finish("size_A non-increasing in q"))
}

/// `derive_pr` tiles `[s+k−1, sk+k−1]` with the documented boundary cases.
pub fn pr_tiling(k_max: usize, s_max: usize) -> Result<Check> {
    let mut t = Tally::default();
    for k in 2..=k_max {
        for s in 1..=s_max {
            let mut last_p = s + 1;
            for q in s + k - 1..=s * k + k - 1 {
                let (p, r) = derive_pr(q, k, s)?;
                let lo = s * k + 1 - p * (k - 1);
                let inside = lo <= q && q <= lo + k - 2 && r == q - p - (s - p) * k;
                let contiguous = p == last_p || p + 1 == last_p;
                t.check(inside && (1..k).contains(&r) && p <= s && contiguous, || {
                    format!("derive_pr({q},{k},{s}) = ({p},{r})")
                });
                last_p = p;
            }
            if k >= 2 {
                let (p_sk, _) = derive_pr(s * k, k, s)?;
                let (p_sk1, _) = derive_pr(s * k + 1, k, s)?;
                t.check(p_sk == 1 && p_sk1 == 0, || format!("boundary p at k={k}, s={s}"));
            }
        }
    }
    Ok(t.finish("(p, r) tiling"))
}

/// `m_closed(16,15,2,7) = C(15,2)` under both the small-n and the `k = 2` theorems.
pub fn small_n_spot_value() -> Result<Check> {
    let mut t = Tally::default();
    let regimes = m_regimes(16, 15, 2, 7)?;
    let expected = binom(15, 2);
    let names: Vec<_> = regimes.iter().map(|r| r.regime.as_str()).collect();
    let has = |name: &str| regimes.iter().any(|r| r.regime.as_str() == name && r.hypotheses_met);
    let closed = m_closed(16, 15, 2, 7)?;
    t.check(
        has(Regime::SmallN.as_str())
            && has(Regime::GraphCase.as_str())
            && regimes.iter().all(|r| r.value == expected)
            && closed.value == expected
            && closed.hypotheses_met,
        || format!("regimes {names:?} do not all give {expected}"),
    );
    t.note(format!("m(16,15,2,7) = {} via {}", closed.value, names.join(" and ")));
    Ok(t.finish("small-n theorem spot value"))
}

/// Wherever two proven regimes of `m_closed` apply, their values agree.
pub fn regime_consistency(k_max: usize, s_max: usize) -> Result<Check> {
    let cells: Vec<(usize, usize)> =
        (2..=k_max).flat_map(|k| (1..=s_max).map(move |s| (k, s))).collect();
    let tallies = par::map(cells, |(k, s)| -> Result<Tally> {
        let mut t = Tally::default();
        for n in (s + 1) * k..=8 * k * k * s + 16 {
            for q in k..(s + 1) * k {
                let regimes = m_regimes(n, q, k, s)?;
                if regimes.len() < 2 {
                    continue;
                }
                let first = &regimes[0].value;
                t.check(regimes.iter().all(|r| &r.value == first), || {
                    let vals: Vec<_> = regimes.iter().map(|r| format!("{}={}", r.regime, r.value)).collect();
                    format!("m({n},{q},{k},{s}): {}", vals.join(", "))
                });
            }
        }
        Ok(t)
    });
    Ok(Tally::merged(fold_errors(tallies)?).finish("overlapping regimes agree"))
}

// ---------------------------------------------------------------------------
// Cross-intersecting families

fn beta_values() -> Vec<BigRational> {
    [(1, 1), (1, 2), (2, 1), (5, 3)]
        .into_iter()
        .map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
        .collect()
}

/// Cells `(n, k, l, t, s)` with `n ≤ n_max`, `k, l ≤ kl_max`, `t ≤ s ≤ s_max`
/// satisfying the bound's hypotheses, with `t ≤ l`: for `t > l` a single
/// l-set is vacuously t-intersecting and the bound does not hold.
fn cross_cells(n_max: usize, kl_max: usize, s_max: usize) -> Result<Vec<[usize; 5]>> {
    let mut cells = Vec::new();
    for n in 1..=n_max {
        for k in 1..=kl_max {
            for l in 1..=kl_max {
                for s in 1..=s_max.min(n) {
                    for t in 0..=s.min(l) {
                        if cross_bound(n, k, l, t, s, &BigRational::one())?.hypotheses_met {
                            cells.push([n, k, l, t, s]);
                        }
                    }
                }
            }
        }
    }
    Ok(cells)
}

/// `A_i = {A : A ∩ [i] ≠ ∅}` and `B_i = {B : [i] ⊆ B}` attain the `i`-th term
/// exactly, and satisfy the bound's hypotheses.
pub fn cross_equality_pairs(n_max: usize, kl_max: usize, s_max: usize) -> Result<Check> {
    let cells = cross_cells(n_max, kl_max, s_max)?;
    let tallies = par::map(cells, |[n, k, l, t, s]| -> Result<Tally> {
        let mut tally = Tally::default();
        for i in t..=s {
            let head = VertexSet::ground(i);
            let a = Family::from_predicate(n, k, |e| !e.is_disjoint(head))?;
            let b = Family::from_predicate(n, l, |e| head.is_subset(e))?;
            let (nu, _) = matching_number(&a);
            let valid = nu <= s && is_t_intersecting(&b, t) && is_cross_intersecting(&a, &b);
            for beta in beta_values() {
                let size = BigRational::from_integer(BigInt::from(a.len()))
                    + &beta * BigRational::from_integer(BigInt::from(b.len()));
                let term = cross_term(n, k, l, i, &beta);
                tally.check(valid && size == term, || {
                    format!("(n,k,l,t,s,i)=({n},{k},{l},{t},{s},{i}) beta={beta}: {size} vs {term}")
                });
            }
        }
        Ok(tally)
    });
    Ok(Tally::merged(fold_errors(tallies)?).finish("equality pairs attain each term"))
}

/// Random `t`-intersecting `B` grown greedily, then `A` grown greedily subject
/// to `ν(A) ≤ s` and cross-intersection with `B`.
fn random_cross_pair<R: Rng>(rng: &mut R, n: usize, k: usize, l: usize, t: usize, s: usize) -> (Family, Family) {
    let mut b: Vec<VertexSet> = Vec::new();
    let b_order = random::shuffled_k_sets(rng, n, l);
    let b_target = rng.gen_range(0..=b_order.len());
    for e in b_order {
        if b.len() >= b_target {
            break;
        }
        if b.iter().all(|x| x.intersection(e).len() >= t) {
            b.push(e);
        }
    }
    let mut a: Vec<u64> = Vec::new();
    let a_order = random::shuffled_k_sets(rng, n, k);
    let keep: f64 = rng.gen_range(0.3..=1.0);
    for e in a_order {
        if !rng.gen_bool(keep) || !b.iter().all(|x| !x.is_disjoint(e)) {
            continue;
        }
        a.push(e.mask());
        if crate::family_core::has_matching_of_size(&a, k, s + 1) {
            a.pop();
        }
    }
    let a = Family::from_edges(n, k, a.into_iter().map(VertexSet::from_mask)).expect("valid edges");
    let b = Family::from_edges(n, l, b).expect("valid edges");
    (a, b)
}

/// Random admissible pairs never exceed the bound.
pub fn cross_random_pairs(seed: u64, pairs: u64) -> Result<Check> {
    let cells = cross_cells(12, 3, 3)?;
    let betas = beta_values();
    let tallies = par::map((0..pairs).collect(), |i| -> Result<Tally> {
        let mut rng = random::rng(seed ^ 0x6372_6f73_7300_0000 ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        let [n, k, l, t, s] = cells[rng.gen_range(0..cells.len())];
        let beta = &betas[rng.gen_range(0..betas.len())];
        let (a, b) = random_cross_pair(&mut rng, n, k, l, t, s);
        let (nu, _) = matching_number(&a);
        let bound = cross_bound(n, k, l, t, s, beta)?;
        let size = BigRational::from_integer(BigInt::from(a.len()))
            + beta * BigRational::from_integer(BigInt::from(b.len()));
        let mut tally = Tally::default();
        let admissible = nu <= s && is_t_intersecting(&b, t) && is_cross_intersecting(&a, &b);
        tally.check(admissible && size <= bound.value, || {
            format!("(n,k,l,t,s)=({n},{k},{l},{t},{s}) beta={beta}: {size} > {}", bound.value)
        });
        Ok(tally)
    });
    Ok(Tally::merged(fold_errors(tallies)?).finish("random cross-intersecting pairs within bound"))
}

// ---------------------------------------------------------------------------
// Cyclic intervals

fn cyclic_orders(m: usize) -> Vec<Vec<usize>> {
    use itertools::Itertools;
    (2..=m)
        .permutations(m - 1)
        .map(|rest| std::iter::once(1).chain(rest).collect())
        .collect()
}

fn cyclic_case(sigma: &[usize], b: usize, d: usize) -> Result<Tally> {
    let m = sigma.len();
    let bs: Vec<VertexSet> = cyclic_intervals(sigma, b)?.iter().collect();
    let ds: Vec<VertexSet> = cyclic_intervals(sigma, d)?.iter().collect();
    // meets[x]: bitmask of the d-intervals meeting the x-th b-interval
    let meets: Vec<u32> = bs
        .iter()
        .map(|x| ds.iter().enumerate().filter(|(_, y)| !x.is_disjoint(**y)).fold(0, |acc, (j, _)| acc | 1 << j))
        .collect();
    let full: u32 = (1u32 << ds.len()) - 1;
    let mut compat = vec![full; 1 << bs.len()];
    let mut t = Tally::default();
    for set in 0usize..1 << bs.len() {
        if set > 0 {
            let low = set.trailing_zeros() as usize;
            compat[set] = compat[set & (set - 1)] & meets[low];
        }
        // the largest D cross-intersecting B is every d-interval meeting all of B
        let size_b = set.count_ones() as usize;
        let size_d = compat[set].count_ones() as usize;
        let within_m = size_b + size_d <= m;
        let within_bd = size_b == 0 || size_d == 0 || size_b + size_d <= b + d;
        t.check(within_m && within_bd, || {
            format!("sigma={sigma:?}, b={b}, d={d}: |B|={size_b}, |D|={size_d}")
        });
    }
    Ok(t)
}

/// Exhaustive over cyclic orders of `[m]`, `m ≤ m_max`, and cross-intersecting
/// `B ⊆ C(σ,b)`, `D ⊆ C(σ,d)` with `b + d ≤ m`. Each `B` is paired with the
/// largest compatible `D`, which dominates every other choice.
pub fn cyclic_interval_bounds(m_max: usize) -> Result<Check> {
    let mut jobs = Vec::new();
    for m in 2..=m_max {
        for sigma in cyclic_orders(m) {
            jobs.push(sigma);
        }
    }
    let tallies = par::map(jobs, |sigma| -> Result<Tally> {
        let m = sigma.len();
        let mut t = Tally::default();
        for b in 1..m {
            for d in 1..=m - b {
                t.merge(cyclic_case(&sigma, b, d)?);
            }
        }
        Ok(t)
    });
    Ok(Tally::merged(fold_errors(tallies)?).finish("cyclic interval bounds"))
}

// ---------------------------------------------------------------------------
// Oracle-backed checks

fn problem(n: usize, q: usize, k: usize, s: usize, mode: Mode, budget: Budget, threads: Option<usize>) -> SearchProblem {
    SearchProblem::new(n, q, k, s, mode).with_budget(budget).with_threads(threads)
}

fn compare_exact(t: &mut Tally, label: &str, result: &SearchResult, expected: &BigInt) {
    if !result.proven_optimal {
        t.unresolved(|| format!("{label}: budget exhausted at {} (best {})", result.nodes_explored, result.value));
        return;
    }
    let value = BigInt::from(result.value);
    t.check(&value == expected, || format!("{label}: oracle {value} vs {expected}"));
}

/// `m(n,q,2,s)` from the oracle equals `max{C(2s+1,2), C(q,2)+(2s+1−q)(n−q)}`
/// for `n_lo ≤ n ≤ n_hi` and `s+1 ≤ q ≤ 2s+1`.
pub fn graph_case_grid(s: usize, n_lo: usize, n_hi: usize, budget: Budget, threads: Option<usize>) -> Result<Check> {
    let mut t = Tally::default();
    for n in n_lo..=n_hi {
        for q in s + 1..=2 * s + 1 {
            let result = oracle::exact_m(&problem(n, q, 2, s, Mode::M, budget, threads))?;
            let formula = binom(2 * s as i64 + 1, 2)
                .max(binom(q as i64, 2) + BigInt::from(2 * s + 1 - q) * BigInt::from(n - q));
            compare_exact(&mut t, &format!("m({n},{q},2,{s})"), &result, &formula);
        }
    }
    Ok(t.finish("k=2 theorem against oracle"))
}

/// `m(9,7,3,2) = 56`: the `q = sk+k−2` theorem against the oracle.
pub fn near_top_value(budget: Budget, threads: Option<usize>) -> Result<Check> {
    let mut t = Tally::default();
    let result = oracle::exact_m(&problem(9, 7, 3, 2, Mode::M, budget, threads))?;
    let closed = m_closed(9, 7, 3, 2)?;
    compare_exact(&mut t, "m(9,7,3,2)", &result, &closed.value);
    t.note(format!("m(9,7,3,2) = {} ({}), closed form {} via {}", result.value, result.nodes_explored, closed.value, closed.regime));
    Ok(t.finish("q = sk+k-2 theorem against oracle"))
}

/// `m*(6,4,2,2) = 9 > size_A(6,4,2,2) = 8` while `m(6,4,2,2) = 10 = conjecture_rhs(6,4,2,2)`.
pub fn boundary_evidence(budget: Budget, threads: Option<usize>) -> Result<Check> {
    let mut t = Tally::default();
    let star = oracle::exact_m_star(&problem(6, 4, 2, 2, Mode::MStar, budget, threads))?;
    let m = oracle::exact_m(&problem(6, 4, 2, 2, Mode::M, budget, threads))?;
    let size = size_a(6, 4, 2, 2)?;
    let conj = conjecture_rhs(6, 4, 2, 2)?;
    if !star.proven_optimal || !m.proven_optimal {
        t.unresolved(|| "budget exhausted".to_string());
    } else {
        t.check(BigInt::from(star.value) == BigInt::from(9) && BigInt::from(star.value) > size && size == BigInt::from(8), || {
            format!("m*(6,4,2,2) = {} vs size_A(6,4,2,2) = {size}", star.value)
        });
        t.check(BigInt::from(m.value) == conj && conj == BigInt::from(10), || {
            format!("m(6,4,2,2) = {} vs conjecture_rhs(6,4,2,2) = {conj}", m.value)
        });
    }
    t.note(format!("m*(6,4,2,2) = {} > size_A(6,4,2,2) = {size}", star.value));
    t.note(format!("m(6,4,2,2) = {} = conjecture_rhs(6,4,2,2) = {conj}", m.value));
    Ok(t.finish("regime-boundary evidence"))
}

/// The conjectured value against the oracle for `(s+1)k ≤ n ≤ n_max` and
/// `s+k−1 ≤ q ≤ sk+k−1`.
pub fn conjecture_grid(k: usize, s: usize, n_max: usize, budget: Budget, threads: Option<usize>) -> Result<Check> {
    if k < 2 || s < 1 {
        return Err(Error::arg(format!("conjecture grid needs k >= 2 and s >= 1 (got k={k}, s={s})")));
    }
    if n_max < (s + 1) * k {
        return Err(Error::arg(format!("n-max={n_max} must be at least (s+1)k={}", (s + 1) * k)));
    }
    let cells: Vec<(usize, usize)> = ((s + 1) * k..=n_max)
        .flat_map(|n| (s + k - 1..=s * k + k - 1).map(move |q| (n, q)))
        .collect();
    let rows = par::map(cells, |(n, q)| -> Result<Tally> {
        let mut t = Tally::default();
        let result = oracle::exact_m(&problem(n, q, k, s, Mode::M, budget, threads))?;
        compare_exact(&mut t, &format!("m({n},{q},{k},{s})"), &result, &conjecture_rhs(n, q, k, s)?);
        Ok(t)
    });
    Ok(Tally::merged(fold_errors(rows)?).finish(&format!("conjecture for k={k}, s={s}, n<={n_max}")))
}

/// Direct search and the max over `m*` agree on a small grid.
pub fn strategies_agree(budget: Budget, threads: Option<usize>) -> Result<Check> {
    let cells = [(6, 3, 2, 2), (6, 4, 2, 2), (7, 4, 2, 2), (8, 3, 2, 2), (7, 4, 3, 1), (8, 5, 3, 1), (9, 6, 3, 2)];
    let mut t = Tally::default();
    for (n, q, k, s) in cells {
        let report = max_over_q(n, q, k, s, budget, threads)?;
        match report.status {
            Status::Inconclusive => t.unresolved(|| report.detail.clone()),
            status => t.check(status == Status::Pass, || report.detail.clone()),
        }
    }
    Ok(t.finish("direct m equals max of m* over t"))
}

/// Records `m*(n,q,k,s)` along `q ∈ [s+k, sk+k−1]` for a few `(n,k,s)`.
///
/// At these sizes `m*` is not monotone in `q` (already `m*(6,4,2,2) = 9 <
/// m*(6,5,2,2) = 10`), so the rows are an observation table: the check only
/// requires every cell to be proven and every witness to re-verify.
pub fn m_star_in_q_table(budget: Budget, threads: Option<usize>) -> Result<Check> {
    let mut t = Tally::default();
    for (n, k, s) in [(6, 2, 2), (8, 2, 2), (8, 2, 3), (9, 3, 2), (10, 3, 2)] {
        let mut row = Vec::new();
        let mut rises = Vec::new();
        let mut prev: Option<usize> = None;
        for q in s + k..=s * k + k - 1 {
            let p = problem(n, q, k, s, Mode::MStar, budget, threads);
            let cur = oracle::exact_m_star(&p)?;
            if !cur.proven_optimal {
                t.unresolved(|| format!("m*({n},{q},{k},{s}): budget exhausted"));
                row.push(format!("{}?", cur.value));
                prev = None;
                continue;
            }
            let valid = cur.value == 0 || oracle::satisfies(&p, &cur.witness).is_ok();
            t.check(valid && cur.witness.len() == cur.value, || format!("m*({n},{q},{k},{s}): witness rejected"));
            if prev.is_some_and(|v| cur.value > v) {
                rises.push(q.to_string());
            }
            row.push(cur.value.to_string());
            prev = Some(cur.value);
        }
        let mut line = format!("m*({n},q,{k},{s}) for q={}..{}: [{}]", s + k, s * k + k - 1, row.join(", "));
        if !rises.is_empty() {
            line.push_str(&format!(" rises at q={}", rises.join(",")));
        }
        t.note(line);
    }
    Ok(t.finish("m* along q (observation)"))
}

/// For random families with `ν ≤ s`, the shift closure keeps the size, does not
/// raise ν and does not lower ω, so searching shifted families loses nothing.
pub fn shifting_loses_nothing(seed: u64, samples: u64) -> Result<Check> {
    let tallies = par::map((0..samples).collect(), |i| -> Result<Tally> {
        let mut rng = random::rng(seed ^ 0x6c6f_7365_7300_0000 ^ i.wrapping_mul(0xd6e8_feb8_6659_fd93));
        let n = rng.gen_range(3..=9);
        let k = rng.gen_range(2..=3.min(n));
        let s = rng.gen_range(1..=3);
        let family = random_bounded_matching(&mut rng, n, k, s);
        let closed = shift_closure(&family);
        let (nu, _) = matching_number(&family);
        let (nu2, _) = matching_number(&closed);
        let (omega, _) = clique_number(&family)?;
        let (omega2, _) = clique_number(&closed)?;
        let mut t = Tally::default();
        t.check(closed.len() == family.len() && nu2 <= nu && nu <= s && omega2 >= omega, || {
            format!("n={n}, k={k}, s={s}: |F|={} -> {}, nu {nu}->{nu2}, omega {omega}->{omega2}", family.len(), closed.len())
        });
        Ok(t)
    });
    Ok(Tally::merged(fold_errors(tallies)?).finish("shift closure preserves the constraints"))
}

/// The recursion identity on a small grid.
pub fn recursion_grid(budget: Budget, threads: Option<usize>) -> Result<Check> {
    let mut t = Tally::default();
    for (n, q, k, s) in [(6, 4, 2, 2), (7, 4, 2, 2), (8, 5, 2, 3), (9, 5, 3, 2), (10, 6, 3, 2), (10, 7, 3, 2)] {
        let report = recursion(n, q, k, s, budget, threads)?;
        match report.status {
            Status::Inconclusive => t.unresolved(|| report.detail.clone()),
            status => t.check(status == Status::Pass, || report.detail.clone()),
        }
        t.note(report.detail);
    }
    Ok(t.finish("recursion identity"))
}

// ---------------------------------------------------------------------------
// Identities

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Identity {
    Recursion,
    Monotonicity,
    #[serde(rename = "eq17")]
    MaxOverQ,
    Trichotomy,
}

impl Identity {
    pub fn as_str(self) -> &'static str {
        match self {
            Identity::Recursion => "recursion",
            Identity::Monotonicity => "monotonicity",
            Identity::MaxOverQ => "eq17",
            Identity::Trichotomy => "trichotomy",
        }
    }

    pub fn parse(name: &str) -> Result<Identity> {
        [Identity::Recursion, Identity::Monotonicity, Identity::MaxOverQ, Identity::Trichotomy]
            .into_iter()
            .find(|i| i.as_str() == name)
            .ok_or_else(|| {
                Error::arg(format!("unknown identity '{name}' (expected recursion, monotonicity, eq17 or trichotomy)"))
            })
    }
}

#[derive(Clone, Debug)]
pub struct IdentityParams {
    pub n: usize,
    pub q: usize,
    pub k: usize,
    pub s: usize,
    pub seed: u64,
    pub samples: u64,
    pub budget: Budget,
    pub threads: Option<usize>,
}

impl IdentityParams {
    pub fn new(n: usize, q: usize, k: usize, s: usize) -> Self {
        IdentityParams { n, q, k, s, seed: 0, samples: 1000, budget: Budget::default(), threads: Some(1) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity: Identity,
    pub status: Status,
    #[serde(serialize_with = "opt_big")]
    pub lhs: Option<BigInt>,
    #[serde(serialize_with = "opt_big")]
    pub rhs: Option<BigInt>,
    pub detail: String,
    #[serde(skip)]
    pub counterexample: Option<Family>,
}

fn opt_big<S: serde::Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(b) => match i64::try_from(b) {
            Ok(x) => s.serialize_i64(x),
            Err(_) => s.serialize_str(&b.to_string()),
        },
        None => s.serialize_none(),
    }
}

/// Recomputes both sides of an identity and reports agreement, a violation
/// (with a counterexample where one exists) or an inconclusive budget stop.
pub fn verify_identity(identity: Identity, params: &IdentityParams) -> Result<IdentityReport> {
    let IdentityParams { n, q, k, s, budget, threads, .. } = *params;
    match identity {
        Identity::Recursion => recursion(n, q, k, s, budget, threads),
        Identity::MaxOverQ => max_over_q(n, q, k, s, budget, threads),
        Identity::Monotonicity => {
            let check = monotonicity_sweep(k.max(2), s.max(1), n)?;
            Ok(IdentityReport {
                identity,
                status: check.status,
                lhs: None,
                rhs: None,
                detail: check.to_string(),
                counterexample: None,
            })
        }
        Identity::Trichotomy => {
            let (found, check) = trichotomy_search(params.seed, params.samples, n.min(10), k.min(4))?;
            Ok(IdentityReport {
                identity,
                status: check.status,
                lhs: None,
                rhs: None,
                detail: check.to_string(),
                counterexample: found,
            })
        }
    }
}

fn trichotomy_search(seed: u64, samples: u64, n_max: usize, k_max: usize) -> Result<(Option<Family>, Check)> {
    let check = trichotomy_random(seed, samples, n_max.max(2), k_max.max(1))?;
    if check.passed() {
        return Ok((None, check));
    }
    // Replay the stream to hand back the first failing family.
    for i in 0..samples {
        let mut rng = random::rng(seed ^ 0x7472_6963_686f_746f ^ i.wrapping_mul(0x2545_f491_4f6c_dd1d));
        let n = rng.gen_range(2..=n_max.max(2));
        let k = rng.gen_range(1..=k_max.max(1).min(n));
        let family = random_shifted_family(&mut rng, n, k);
        let (nu, _) = matching_number(&family);
        let s = rng.gen_range(nu.max(1)..=nu + 2);
        if !trichotomy_holds(&family, s)? {
            return Ok((Some(family), check));
        }
    }
    Ok((None, check))
}

/// `m(n,q,k,s)` by direct search against `max_{q ≤ t < (s+1)k} m*(n,t,k,s)`.
fn max_over_q(n: usize, q: usize, k: usize, s: usize, budget: Budget, threads: Option<usize>) -> Result<IdentityReport> {
    let p = problem(n, q, k, s, Mode::M, budget, threads);
    let direct = oracle::exact_m_with(&p, MStrategy::Direct)?;
    let via = oracle::exact_m_with(&p, MStrategy::ViaMStar)?;
    let lhs = BigInt::from(direct.value);
    let rhs = BigInt::from(via.value);
    let status = if !direct.proven_optimal || !via.proven_optimal {
        Status::Inconclusive
    } else if lhs == rhs {
        Status::Pass
    } else {
        Status::Fail
    };
    let counterexample = (status == Status::Fail).then(|| {
        if direct.value > via.value { direct.witness.clone() } else { via.witness.clone() }
    });
    Ok(IdentityReport {
        identity: Identity::MaxOverQ,
        status,
        detail: format!("m({n},{q},{k},{s}) = {lhs} directly, {rhs} as max over t of m*"),
        lhs: Some(lhs),
        rhs: Some(rhs),
        counterexample,
    })
}

/// `m*(n,q,k,s)` against `C(n−1,k−1) + m*(n−1,q−1,k,s−1)`.
///
/// Adding the full star at 1 to an optimal family for the smaller instance
/// gives `≥` whenever that instance is feasible; equality is claimed only when
/// the optimum found is reducible, i.e. `ν(F(1̄)) = s − 1`.
fn recursion(n: usize, q: usize, k: usize, s: usize, budget: Budget, threads: Option<usize>) -> Result<IdentityReport> {
    if s < 2 || q <= k || n < 2 {
        return Err(Error::arg(format!(
            "recursion needs s >= 2 and q > k so the smaller instance is defined (got q={q}, k={k}, s={s})"
        )));
    }
    let outer = oracle::exact_m_star(&problem(n, q, k, s, Mode::MStar, budget, threads))?;
    let inner = oracle::exact_m_star(&problem(n - 1, q - 1, k, s - 1, Mode::MStar, budget, threads))?;
    let lhs = BigInt::from(outer.value);
    let rhs = formulas::recursion_rhs(n, k, &BigInt::from(inner.value));
    let reducible = outer.value > 0 && {
        let rest = restrict_avoid(&outer.witness, VertexSet::ground(1));
        matching_number(&rest).0 + 1 == s
    };
    let applicable = inner.value > 0;
    let status = if !outer.proven_optimal || !inner.proven_optimal {
        Status::Inconclusive
    } else if (applicable && lhs < rhs) || (reducible && lhs != rhs) {
        Status::Fail
    } else {
        Status::Pass
    };
    let relation = match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => "<",
        std::cmp::Ordering::Equal => "=",
        std::cmp::Ordering::Greater => ">",
    };
    let mut detail = format!(
        "m*({n},{q},{k},{s}) = {lhs} {relation} C({},{}) + m*({},{},{k},{}) = {rhs}",
        n - 1,
        k - 1,
        n - 1,
        q - 1,
        s - 1
    );
    detail.push_str(if reducible { " (optimum reducible)" } else { " (optimum not reducible)" });
    if !applicable {
        detail.push_str(", smaller instance infeasible");
    }
    Ok(IdentityReport {
        identity: Identity::Recursion,
        status,
        lhs: Some(lhs),
        rhs: Some(rhs),
        detail,
        counterexample: (status == Status::Fail).then(|| outer.witness.clone()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: usize, k: usize, lists: &[&[usize]]) -> Family {
        let lists: Vec<Vec<usize>> = lists.iter().map(|l| l.to_vec()).collect();
        Family::from_vertex_lists(n, k, &lists).unwrap()
    }

    #[test]
    fn trichotomy_branches_on_known_families() {
        let e = Construction::E { n: 7, k: 2, s: 2 }.build().unwrap();
        assert_eq!(trichotomy_branches(&e, 2).unwrap(), [true, false, false]);
        let clique = Construction::Clique { n: 7, q: 5, k: 2 }.build().unwrap();
        assert_eq!(trichotomy_branches(&clique, 2).unwrap(), [false, false, true]);
        let a = Construction::A { n: 7, q: 4, k: 2, s: 2 }.build().unwrap();
        assert_eq!(trichotomy_branches(&a, 2).unwrap(), [false, true, false]);
        let empty = Family::empty(5, 2).unwrap();
        assert!(trichotomy_holds(&empty, 1).unwrap());
        let singles = fam(4, 1, &[&[1], &[2]]);
        assert!(trichotomy_holds(&singles, 2).unwrap());
    }

    #[test]
    fn tally_status_ordering() {
        let mut t = Tally::default();
        t.check(true, String::new);
        assert_eq!(t.clone().finish("x").status, Status::Pass);
        t.unresolved(|| "slow".into());
        assert_eq!(t.clone().finish("x").status, Status::Inconclusive);
        t.check(false, || "bad".into());
        let c = t.finish("x");
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.cases, 3);
        assert!(c.detail.contains("bad"));
    }

    #[test]
    fn cyclic_orders_fix_the_first_point() {
        let orders = cyclic_orders(4);
        assert_eq!(orders.len(), 6);
        assert!(orders.iter().all(|o| o[0] == 1));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.as_str()).unwrap(), s);
        }
        assert!(Suite::parse("nope").is_err());
        assert_eq!(Identity::parse("eq17").unwrap(), Identity::MaxOverQ);
    }

    #[test]
    fn max_over_q_at_the_boundary_cell() {
        let r = verify_identity(Identity::MaxOverQ, &IdentityParams::new(6, 4, 2, 2)).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.lhs, Some(BigInt::from(10)));
    }

    #[test]
    fn recursion_rejects_undefined_smaller_instance() {
        assert!(verify_identity(Identity::Recursion, &IdentityParams::new(6, 4, 2, 1)).is_err());
    }
}
