//! Exhaustive classical bounds of symmetric two-body inequalities.
//!
//! A deterministic strategy gives every party a response `±1` for each of
//! the `m` settings, so there are `2^m` local response types. Symmetric
//! correlators depend only on how many parties use each type, which reduces
//! `2^(mN)` joint strategies to `C(N + 2^m - 1, 2^m - 1)` multisets.

use rand::Rng;
use serde::Serialize;

use crate::bell::{Correlators, SymmetricBellInequality};
use crate::error::{Error, Result};

/// Maximum number of multiset classes visited by [`lhv_bound_symmetric`].
pub const ENUMERATION_BUDGET: u128 = 10_000_000;
const NAIVE_MAX_BITS: usize = 22;

/// Response of type `t` to setting `k`: bit `k` set means `-1`.
fn response(t: usize, k: usize) -> f64 {
    if (t >> k) & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Party counts per local response type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeterministicStrategy {
    pub settings: usize,
    pub counts: Vec<usize>,
}

impl DeterministicStrategy {
    pub fn n_parties(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Explicit per-party responses `a[i][k]`, parties sorted by type.
    pub fn assignments(&self) -> Vec<Vec<i8>> {
        let mut out = Vec::new();
        for (t, &n) in self.counts.iter().enumerate() {
            for _ in 0..n {
                out.push((0..self.settings).map(|k| response(t, k) as i8).collect());
            }
        }
        out
    }

    pub fn random<R: Rng + ?Sized>(settings: usize, n: usize, rng: &mut R) -> Self {
        let types = 1usize << settings;
        let mut counts = vec![0; types];
        for _ in 0..n {
            counts[rng.random_range(0..types)] += 1;
        }
        Self { settings, counts }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LhvBound {
    /// Minimum of the inequality's left-hand side over all strategies.
    pub min_value: f64,
    pub argmin: DeterministicStrategy,
    pub classes_visited: u128,
}

/// Correlators of a strategy from type counts:
/// `𝒞_k = S_k`, `𝒞_kl = S_k S_l - Σ_t n_t a_k(t) a_l(t)`.
fn counts_correlators(m: usize, counts: &[usize]) -> Correlators {
    let s: Vec<f64> = (0..m)
        .map(|k| counts.iter().enumerate().map(|(t, &n)| n as f64 * response(t, k)).sum())
        .collect();
    let two_body = (0..m)
        .map(|k| {
            (0..m)
                .map(|l| {
                    let diag: f64 = counts
                        .iter()
                        .enumerate()
                        .map(|(t, &n)| n as f64 * response(t, k) * response(t, l))
                        .sum();
                    s[k] * s[l] - diag
                })
                .collect()
        })
        .collect();
    Correlators {
        one_body: s,
        two_body,
    }
}

pub fn strategy_value(ineq: &SymmetricBellInequality, strategy: &DeterministicStrategy) -> Result<f64> {
    ineq.evaluate(&counts_correlators(strategy.settings, &strategy.counts))
}

/// Strategy value from explicit per-party responses, summing over ordered
/// pairs of distinct parties.
pub fn strategy_value_per_party(ineq: &SymmetricBellInequality, a: &[Vec<i8>]) -> Result<f64> {
    let m = ineq.settings();
    let mut one_body = vec![0.0; m];
    let mut two_body = vec![vec![0.0; m]; m];
    for (i, ai) in a.iter().enumerate() {
        for k in 0..m {
            one_body[k] += ai[k] as f64;
        }
        for (j, aj) in a.iter().enumerate() {
            if i == j {
                continue;
            }
            for k in 0..m {
                for l in 0..m {
                    two_body[k][l] += (ai[k] * aj[l]) as f64;
                }
            }
        }
    }
    ineq.evaluate(&Correlators { one_body, two_body })
}

fn class_count(n: usize, types: usize) -> u128 {
    // C(n + types - 1, types - 1)
    let r = (types - 1) as u128;
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n as u128 + r - i) / (i + 1);
    }
    acc
}

/// Minimum over all multisets of local response types.
pub fn lhv_bound_symmetric(ineq: &SymmetricBellInequality, n: usize) -> Result<LhvBound> {
    let m = ineq.settings();
    if m == 0 || m > 6 {
        return Err(Error::OutOfRange {
            name: "settings",
            value: m as f64,
            reason: "supported range is 1..=6",
        });
    }
    let types = 1usize << m;
    let classes = class_count(n, types);
    if classes > ENUMERATION_BUDGET {
        return Err(Error::EnumerationBudget {
            classes,
            budget: ENUMERATION_BUDGET,
        });
    }
    let mut counts = vec![0usize; types];
    let mut best = LhvBound {
        min_value: f64::INFINITY,
        argmin: DeterministicStrategy {
            settings: m,
            counts: counts.clone(),
        },
        classes_visited: 0,
    };
    visit(ineq, m, 0, n, &mut counts, &mut best)?;
    Ok(best)
}

fn visit(
    ineq: &SymmetricBellInequality,
    m: usize,
    pos: usize,
    remaining: usize,
    counts: &mut Vec<usize>,
    best: &mut LhvBound,
) -> Result<()> {
    if pos == counts.len() - 1 {
        counts[pos] = remaining;
        let v = ineq.evaluate(&counts_correlators(m, counts))?;
        best.classes_visited += 1;
        if v < best.min_value {
            best.min_value = v;
            best.argmin.counts.clone_from(counts);
        }
        counts[pos] = 0;
        return Ok(());
    }
    for c in 0..=remaining {
        counts[pos] = c;
        visit(ineq, m, pos + 1, remaining - c, counts, best)?;
    }
    counts[pos] = 0;
    Ok(())
}

/// Minimum over all `2^(mN)` joint strategies, with correlators summed per
/// party. Only feasible for `mN ≤ 22`.
pub fn lhv_bound_naive(ineq: &SymmetricBellInequality, n: usize) -> Result<f64> {
    let m = ineq.settings();
    let bits = m * n;
    if bits > NAIVE_MAX_BITS {
        return Err(Error::EnumerationBudget {
            classes: 1u128 << bits,
            budget: 1u128 << NAIVE_MAX_BITS,
        });
    }
    let mut best = f64::INFINITY;
    let mut a = vec![vec![0i8; m]; n];
    for code in 0u64..(1u64 << bits) {
        for (i, ai) in a.iter_mut().enumerate() {
            for (k, x) in ai.iter_mut().enumerate() {
                *x = if (code >> (i * m + k)) & 1 == 0 { 1 } else { -1 };
            }
        }
        best = best.min(strategy_value_per_party(ineq, &a)?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn two_setting_bound_is_zero() {
        for n in 2..=8 {
            let b = lhv_bound_symmetric(&SymmetricBellInequality::two_setting(n), n).unwrap();
            assert!(b.min_value.abs() < 1e-9, "N={n}: {}", b.min_value);
        }
    }

    #[test]
    fn naive_agrees_with_multiset() {
        for (m, n) in [(2, 3), (2, 5), (3, 3), (3, 4)] {
            let ineq = SymmetricBellInequality::multi_setting(m, n);
            let a = lhv_bound_symmetric(&ineq, n).unwrap().min_value;
            let b = lhv_bound_naive(&ineq, n).unwrap();
            assert!((a - b).abs() < 1e-9, "m={m} N={n}: {a} vs {b}");
        }
    }

    #[test]
    fn counts_and_parties_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let ineq = SymmetricBellInequality::multi_setting(3, 7);
        for _ in 0..50 {
            let s = DeterministicStrategy::random(3, 7, &mut rng);
            let a = strategy_value(&ineq, &s).unwrap();
            let b = strategy_value_per_party(&ineq, &s.assignments()).unwrap();
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn class_counts() {
        assert_eq!(class_count(4, 8), 330);
        assert_eq!(class_count(8, 4), 165);
    }

    #[test]
    fn budget_enforced() {
        let ineq = SymmetricBellInequality::multi_setting(6, 40);
        assert!(matches!(
            lhv_bound_symmetric(&ineq, 40),
            Err(Error::EnumerationBudget { .. })
        ));
    }
}
