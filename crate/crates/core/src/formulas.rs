//! Closed-form bounds and exact values, evaluated in arbitrary precision.
//!
//! Every evaluator that corresponds to a theorem with side conditions returns
//! a [`BoundResult`] carrying the value together with a verdict on whether
//! those side conditions hold for the given arguments.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// `C(a, b)` with the convention `C(a, b) = 0` whenever `a < b` or `b < 0`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || a < b || a < 0 {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

fn c(a: usize, b: usize) -> BigInt {
    binom(a as i64, b as i64)
}

/// The parameter tuple `(n, q, k, s)` plus the derived pair `(p, r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub n: usize,
    pub q: usize,
    pub k: usize,
    pub s: usize,
    pub p: usize,
    pub r: usize,
}

impl Params {
    pub fn new(n: usize, q: usize, k: usize, s: usize) -> Result<Self> {
        let (p, r) = derive_pr(q, k, s)?;
        if n < q {
            return Err(Error::arg(format!("n={n} must be at least q={q}")));
        }
        Ok(Params { n, q, k, s, p, r })
    }
}

/// Which closed form produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    #[serde(rename = "sizeA")]
    SizeA,
    #[serde(rename = "emc")]
    Emc,
    #[serde(rename = "hm")]
    HiltonMilner,
    #[serde(rename = "zero")]
    Zero,
    #[serde(rename = "clique-top")]
    CliqueTop,
    #[serde(rename = "specialcase-1")]
    GraphCase,
    #[serde(rename = "specialcase-2")]
    NearTop,
    #[serde(rename = "main-4")]
    SmallN,
    #[serde(rename = "main-1")]
    ShiftedLargeN,
    #[serde(rename = "main-2")]
    LargeN,
    #[serde(rename = "main-2-low")]
    LargeNLowQ,
    #[serde(rename = "conjecture")]
    Conjecture,
    #[serde(rename = "cross")]
    Cross,
    #[serde(rename = "crossdirect")]
    CrossDirect,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::SizeA => "sizeA",
            Regime::Emc => "emc",
            Regime::HiltonMilner => "hm",
            Regime::Zero => "zero",
            Regime::CliqueTop => "clique-top",
            Regime::GraphCase => "specialcase-1",
            Regime::NearTop => "specialcase-2",
            Regime::SmallN => "main-4",
            Regime::ShiftedLargeN => "main-1",
            Regime::LargeN => "main-2",
            Regime::LargeNLowQ => "main-2-low",
            Regime::Conjecture => "conjecture",
            Regime::Cross => "cross",
            Regime::CrossDirect => "crossdirect",
        }
    }
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundResult {
    pub value: BigInt,
    pub regime: Regime,
    pub hypotheses_met: bool,
    pub note: String,
}

impl BoundResult {
    fn proven(value: BigInt, regime: Regime) -> Self {
        BoundResult { value, regime, hypotheses_met: true, note: String::new() }
    }

    fn unproven(value: BigInt, regime: Regime, note: &str) -> Self {
        BoundResult { value, regime, hypotheses_met: false, note: note.to_string() }
    }
}

/// The unique `(p, r)` with `sk − p(k−1) + 1 ≤ q ≤ sk − p(k−1) + k − 1` and
/// `r = q − p − (s − p)k`, defined for `s + k − 1 ≤ q ≤ sk + k − 1`.
pub fn derive_pr(q: usize, k: usize, s: usize) -> Result<(usize, usize)> {
    if k < 2 || s < 1 {
        return Err(Error::arg(format!("need k >= 2 and s >= 1 (got k={k}, s={s})")));
    }
    if q + 1 < s + k || q > s * k + k - 1 {
        return Err(Error::arg(format!(
            "q={q} outside [s+k-1, sk+k-1] = [{}, {}]",
            s + k - 1,
            s * k + k - 1
        )));
    }
    for p in 0..=s {
        let lo = s * k - p * (k - 1) + 1;
        let hi = s * k - p * (k - 1) + k - 1;
        if (lo..=hi).contains(&q) {
            return Ok((p, q - p - (s - p) * k));
        }
    }
    Err(Error::Internal(format!("no p found for q={q}, k={k}, s={s}")))
}

/// `|A(n,q,k,s)| = C(n,k) − C(n−p,k) + C(q−p,k) + Σ_{i=r+1}^{k−1} C(q−p−1,i−1)·C(n−q,k−i)`.
pub fn size_a(n: usize, q: usize, k: usize, s: usize) -> Result<BigInt> {
    let Params { p, r, .. } = Params::new(n, q, k, s)?;
    Ok(size_a_unchecked(n, q, k, p, r))
}

fn size_a_unchecked(n: usize, q: usize, k: usize, p: usize, r: usize) -> BigInt {
    let mut total = c(n, k) - c(n - p, k) + c(q - p, k);
    for i in r + 1..k {
        total += c(q - p - 1, i - 1) * c(n - q, k - i);
    }
    total
}

/// `max{C(n,k) − C(n−s,k), C((s+1)k−1, k)}`.
pub fn emc_bound(n: usize, k: usize, s: usize) -> Result<BigInt> {
    if n < (s + 1) * k {
        return Err(Error::arg(format!("n={n} must be at least (s+1)k={}", (s + 1) * k)));
    }
    Ok(emc_value(n, k, s))
}

fn emc_value(n: usize, k: usize, s: usize) -> BigInt {
    (c(n, k) - c(n - s, k)).max(c((s + 1) * k - 1, k))
}

/// `C(n−1,k−1) − C(n−k−1,k−1) + 1`.
pub fn hm_bound(n: usize, k: usize) -> Result<BigInt> {
    if n <= 2 * k {
        return Err(Error::arg(format!("n={n} must exceed 2k={}", 2 * k)));
    }
    Ok(c(n - 1, k - 1) - c(n - k - 1, k - 1) + 1)
}

/// Closed form for the shifted problem with `ν = s` and `ω = q` exactly.
pub fn m_star_closed(n: usize, q: usize, k: usize, s: usize) -> Result<BoundResult> {
    let params = Params::new(n, q, k, s)?;
    if q == s * k + k - 1 {
        return Ok(BoundResult::proven(c(q, k), Regime::CliqueTop));
    }
    let value = size_a_unchecked(n, q, k, params.p, params.r);
    if q >= s + k && n >= 8 * k * k * s {
        Ok(BoundResult::proven(value, Regime::ShiftedLargeN))
    } else {
        Ok(BoundResult::unproven(value, Regime::ShiftedLargeN, "outside proven regime"))
    }
}

/// `max{|A(n,q,k,s)|, C(sk+k−1, k)}`.
pub fn conjecture_rhs(n: usize, q: usize, k: usize, s: usize) -> Result<BigInt> {
    if n < (s + 1) * k {
        return Err(Error::arg(format!("n={n} must be at least (s+1)k={}", (s + 1) * k)));
    }
    Ok(size_a(n, q, k, s)?.max(c(s * k + k - 1, k)))
}

fn check_m_args(n: usize, q: usize, k: usize, s: usize) -> Result<()> {
    if k < 2 || s < 1 {
        return Err(Error::arg(format!("need k >= 2 and s >= 1 (got k={k}, s={s})")));
    }
    if n < (s + 1) * k {
        return Err(Error::arg(format!("n={n} must be at least (s+1)k={}", (s + 1) * k)));
    }
    if q < k {
        return Err(Error::arg(format!("q={q} must be at least k={k}")));
    }
    Ok(())
}

/// Every proven closed form whose hypotheses hold at `(n, q, k, s)`, most
/// specific first. Overlapping regimes are expected to agree.
pub fn m_regimes(n: usize, q: usize, k: usize, s: usize) -> Result<Vec<BoundResult>> {
    check_m_args(n, q, k, s)?;
    let top = s * k + k - 1;
    if q > top {
        return Ok(vec![BoundResult::proven(BigInt::zero(), Regime::Zero)]);
    }
    let mut out = Vec::new();
    if k == 2 && s >= 2 && (s + 1..=2 * s + 1).contains(&q) && n >= 2 * s + 2 {
        let tail = BigInt::from(2 * s + 1 - q) * BigInt::from(n - q);
        out.push(BoundResult::proven(c(2 * s + 1, 2).max(c(q, 2) + tail), Regime::GraphCase));
    }
    if q == top {
        out.push(BoundResult::proven(c(top, k), Regime::CliqueTop));
    }
    if q + 1 == top {
        let grow = c(q, k) + c(q - 1, k - 2) * BigInt::from(n - q);
        out.push(BoundResult::proven(c(top, k).max(grow), Regime::NearTop));
    }
    // q = (s+1)k − l with l < s/(3k) and n ≤ (s+1)k + s/(3k) − l, cleared of denominators
    let l = (s + 1) * k - q;
    if 3 * k * l < s && 3 * k * n + 3 * k * l <= 3 * k * (s + 1) * k + s {
        out.push(BoundResult::proven(c(top, k), Regime::SmallN));
    }
    if n >= 8 * k * k * s {
        if q >= s + k {
            out.push(BoundResult::proven(size_a(n, q, k, s)?, Regime::LargeN));
        } else {
            out.push(BoundResult::proven(c(n, k) - c(n - s, k), Regime::LargeNLowQ));
        }
    }
    Ok(out)
}

/// `m(n, q, k, s)` from the most specific proven theorem, or the conjectured
/// value (flagged `hypotheses_met = false`) when none applies.
pub fn m_closed(n: usize, q: usize, k: usize, s: usize) -> Result<BoundResult> {
    if let Some(best) = m_regimes(n, q, k, s)?.into_iter().next() {
        return Ok(best);
    }
    let value = if q + 1 >= s + k { conjecture_rhs(n, q, k, s)? } else { emc_value(n, k, s) };
    Ok(BoundResult::unproven(value, Regime::Conjecture, "Conjecture only"))
}

/// Value of the cross-intersecting bound together with the maximizing index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossBound {
    pub value: BigRational,
    pub maximizing_i: usize,
    pub hypotheses_met: bool,
    pub note: String,
}

/// The `i`-th term `C(n,k) − C(n−i,k) + β·C(n−i, l−i)`.
pub fn cross_term(n: usize, k: usize, l: usize, i: usize, beta: &BigRational) -> BigRational {
    let base = c(n, k) - c(n - i, k);
    let tail = binom((n - i) as i64, l as i64 - i as i64);
    BigRational::from_integer(base) + beta * BigRational::from_integer(tail)
}

/// `max_{t ≤ i ≤ s} {C(n,k) − C(n−i,k) + β·C(n−i, l−i)}` in exact rationals.
///
/// Structural violations (`t > s`, `β ≤ 0`, zero sizes, `s > n`) are errors.
/// The lower bound on `n` is reported through `hypotheses_met`, with the
/// failing inequality named in `note`.
pub fn cross_bound(
    n: usize,
    k: usize,
    l: usize,
    t: usize,
    s: usize,
    beta: &BigRational,
) -> Result<CrossBound> {
    if n == 0 || k == 0 || l == 0 || s == 0 {
        return Err(Error::arg("n, k, l and s must be positive"));
    }
    if t > s {
        return Err(Error::arg(format!("need s >= t (got s={s}, t={t})")));
    }
    if s > n {
        return Err(Error::arg(format!("s={s} exceeds n={n}")));
    }
    if !beta.is_positive() {
        return Err(Error::arg(format!("beta={beta} must be positive")));
    }
    let mut failing = Vec::new();
    if n < k + l {
        failing.push(format!("n >= k+l ({n} < {})", k + l));
    }
    if n < (2 * s + 1) * k {
        failing.push(format!("n >= (2s+1)k ({n} < {})", (2 * s + 1) * k));
    }
    let overlap = (l as i64 - t as i64 + 1) * (t as i64 + 1);
    if (n as i64) < overlap {
        failing.push(format!("n >= (l-t+1)(t+1) ({n} < {overlap})"));
    }
    let mut best: Option<(BigRational, usize)> = None;
    for i in t..=s {
        let term = cross_term(n, k, l, i, beta);
        if best.as_ref().is_none_or(|(v, _)| term > *v) {
            best = Some((term, i));
        }
    }
    let (value, maximizing_i) = best.expect("t <= s gives a nonempty range");
    Ok(CrossBound {
        value,
        maximizing_i,
        hypotheses_met: failing.is_empty(),
        note: if failing.is_empty() {
            String::new()
        } else {
            format!("violated: {}", failing.join("; "))
        },
    })
}

/// `max{C(n1−1,l−1)C(n2,k−l) + C(n1−1,l′−1)C(n2,k−l′), 2s·C(n1−1,l′−1)C(n2,k−l′)}`.
pub fn cross_direct_bound(
    n1: usize,
    n2: usize,
    k: usize,
    l: usize,
    lp: usize,
    s: usize,
) -> Result<BigInt> {
    if !(1 <= l && l < lp && lp < k) {
        return Err(Error::arg(format!("need 1 <= l < l' <= k-1 (got l={l}, l'={lp}, k={k})")));
    }
    if n2 < 4 * k * n1 {
        return Err(Error::arg(format!("need n2 >= 4k*n1 ({n2} < {})", 4 * k * n1)));
    }
    if n1 < l + lp {
        return Err(Error::arg(format!("need n1 >= l+l' ({n1} < {})", l + lp)));
    }
    let wide = c(n1 - 1, lp - 1) * c(n2, k - lp);
    let first = c(n1 - 1, l - 1) * c(n2, k - l) + &wide;
    let second = BigInt::from(2 * s) * wide;
    Ok(first.max(second))
}

/// `C(n−1, k−1) + m*(n−1, q−1, k, s−1)` given the inner value.
pub fn recursion_rhs(n: usize, k: usize, m_star_smaller: &BigInt) -> BigInt {
    c(n - 1, k - 1) + m_star_smaller
}

/// Whether a rational is integral; used when rendering values.
pub fn as_integer(value: &BigRational) -> Option<BigInt> {
    value.is_integer().then(|| value.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(big(v))
    }

    #[test]
    fn binom_conventions() {
        assert_eq!(binom(5, 2), big(10));
        assert_eq!(binom(2, 3), big(0));
        assert_eq!(binom(4, -1), big(0));
        assert_eq!(binom(0, 0), big(1));
        assert_eq!(binom(64, 32).to_string(), "1832624140942590534");
    }

    #[test]
    fn derive_pr_examples() {
        assert_eq!(derive_pr(7, 3, 2).unwrap(), (0, 1));
        assert_eq!(derive_pr(5, 3, 2).unwrap(), (1, 1));
        assert_eq!(derive_pr(4, 3, 2).unwrap(), (2, 2));
        assert!(derive_pr(3, 3, 2).is_err());
        assert!(derive_pr(9, 3, 2).is_err());
        assert!(derive_pr(3, 1, 2).is_err());
    }

    #[test]
    fn derive_pr_boundaries() {
        for k in 2..=5 {
            for s in 1..=5 {
                if s * k > s + k - 1 {
                    assert_eq!(derive_pr(s * k, k, s).unwrap().0, 1, "q=sk, k={k}, s={s}");
                }
                assert_eq!(derive_pr(s * k + 1, k, s).unwrap().0, 0);
            }
        }
    }

    #[test]
    fn size_a_examples() {
        assert_eq!(size_a(10, 7, 3, 2).unwrap(), big(53));
        assert_eq!(size_a(10, 5, 3, 2).unwrap(), big(55));
        assert_eq!(size_a(6, 3, 2, 2).unwrap(), big(9));
        assert_eq!(size_a(6, 4, 2, 2).unwrap(), big(8));
        assert!(size_a(6, 7, 3, 2).is_err());
    }

    #[test]
    fn emc_and_hm_examples() {
        assert_eq!(emc_bound(6, 2, 2).unwrap(), big(10));
        assert_eq!(emc_bound(64, 2, 2).unwrap(), big(125));
        assert_eq!(emc_bound(9, 3, 2).unwrap(), big(56));
        assert!(emc_bound(5, 2, 2).is_err());
        assert_eq!(hm_bound(7, 3).unwrap(), big(13));
        assert_eq!(hm_bound(6, 2).unwrap(), big(3));
        assert_eq!(hm_bound(8, 3).unwrap(), big(16));
        assert!(hm_bound(6, 3).is_err());
    }

    #[test]
    fn m_star_examples() {
        let a = m_star_closed(144, 7, 3, 2).unwrap();
        assert_eq!(a.value, big(857));
        assert!(a.hypotheses_met);
        let b = m_star_closed(10, 5, 2, 2).unwrap();
        assert_eq!((b.value, b.regime), (big(10), Regime::CliqueTop));
        let c = m_star_closed(6, 4, 2, 2).unwrap();
        assert_eq!(c.value, big(8));
        assert!(!c.hypotheses_met);
        assert_eq!(c.note, "outside proven regime");
    }

    #[test]
    fn m_closed_examples() {
        let a = m_closed(9, 4, 2, 2).unwrap();
        assert_eq!((a.value, a.regime, a.hypotheses_met), (big(11), Regime::GraphCase, true));
        let b = m_closed(9, 7, 3, 2).unwrap();
        assert_eq!((b.value, b.regime), (big(56), Regime::NearTop));
        let c = m_closed(16, 15, 2, 7).unwrap();
        assert_eq!(c.value, big(105));
        let d = m_closed(64, 3, 2, 2).unwrap();
        assert_eq!(d.value, big(125));
        assert_eq!(m_closed(9, 9, 3, 2).unwrap().value, big(0));
        assert!(m_closed(5, 3, 2, 2).is_err());
    }

    #[test]
    fn overlapping_regimes_agree() {
        let regs = m_regimes(64, 3, 2, 2).unwrap();
        let tags: Vec<_> = regs.iter().map(|r| r.regime).collect();
        assert_eq!(tags, vec![Regime::GraphCase, Regime::LargeNLowQ]);
        assert!(regs.iter().all(|r| r.value == big(125)));

        let small = m_regimes(16, 15, 2, 7).unwrap();
        let tags: Vec<_> = small.iter().map(|r| r.regime).collect();
        assert!(tags.contains(&Regime::GraphCase) && tags.contains(&Regime::SmallN));
        assert!(small.iter().all(|r| r.value == big(105)));
    }

    #[test]
    fn conjecture_fallback() {
        let r = m_closed(11, 6, 3, 2).unwrap();
        assert!(!r.hypotheses_met);
        assert_eq!(r.note, "Conjecture only");
        assert_eq!(r.value, conjecture_rhs(11, 6, 3, 2).unwrap());
    }

    #[test]
    fn conjecture_examples() {
        assert_eq!(conjecture_rhs(6, 4, 2, 2).unwrap(), big(10));
        assert_eq!(conjecture_rhs(9, 7, 3, 2).unwrap(), big(56));
        assert_eq!(conjecture_rhs(11, 7, 3, 2).unwrap(), big(59));
    }

    #[test]
    fn cross_examples() {
        let a = cross_bound(10, 3, 3, 1, 2, &rat(1)).unwrap();
        assert_eq!(a.value, rat(72));
        assert_eq!(a.maximizing_i, 1);
        assert!(!a.hypotheses_met);
        assert!(a.note.contains("(2s+1)k"));
        let b = cross_bound(12, 2, 2, 1, 2, &rat(1)).unwrap();
        assert_eq!(b.value, rat(22));
        assert!(b.hypotheses_met);
        let half = BigRational::new(big(1), big(2));
        let single = cross_bound(12, 2, 3, 2, 2, &half).unwrap();
        assert_eq!(single.value, cross_term(12, 2, 3, 2, &half));
        assert!(cross_bound(12, 2, 2, 3, 2, &rat(1)).is_err());
        assert!(cross_bound(12, 2, 2, 1, 2, &rat(0)).is_err());
    }

    #[test]
    fn cross_direct_examples() {
        assert_eq!(cross_direct_bound(6, 100, 4, 1, 3, 2).unwrap(), big(162700));
        assert_eq!(cross_direct_bound(4, 64, 3, 1, 2, 2).unwrap(), big(2208));
        assert_eq!(cross_direct_bound(4, 64, 3, 1, 2, 20).unwrap(), big(7680));
        assert!(cross_direct_bound(4, 47, 3, 1, 2, 2).is_err());
        assert!(cross_direct_bound(4, 64, 3, 2, 2, 2).is_err());
        assert!(cross_direct_bound(2, 64, 3, 1, 2, 2).is_err());
    }

    #[test]
    fn recursion_shell() {
        assert_eq!(recursion_rhs(10, 3, &big(5)), big(41));
        assert_eq!(recursion_rhs(6, 2, &big(0)), big(5));
    }
}
