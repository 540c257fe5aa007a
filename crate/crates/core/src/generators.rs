//! Seeded instance generators and the LCS oracle for permutations.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::instance::{Interval, IntervalModel, Layer, TemporalIntervalInstance, Vertex};
use crate::rational::Rational;

fn check_sizes(n: usize, tau: usize, delta: usize) -> Result<()> {
    if n == 0 || tau == 0 {
        return Err(Error::InvalidParameter("n and tau must be at least 1".into()));
    }
    if delta == 0 || delta > tau {
        return Err(Error::DeltaOutOfRange { delta, tau });
    }
    Ok(())
}

fn vertices(n: usize, rng: &mut ChaCha8Rng, max_weight: Option<u32>) -> Vec<Vertex> {
    (1..=n)
        .map(|i| match max_weight {
            Some(m) => Vertex::weighted(format!("v{i}"), Rational::from(rng.gen_range(1..=m.max(1)) as usize)),
            None => Vertex::new(format!("v{i}")),
        })
        .collect()
}

fn unit_layer(lefts: impl IntoIterator<Item = Rational>) -> Layer {
    Layer::Model(
        IntervalModel::new(lefts.into_iter().map(|l| Interval::new(l, l + Rational::ONE)).collect())
            .expect("unit intervals"),
    )
}

/// Random unit instance: every left endpoint is drawn uniformly from the
/// grid `{m/(n+1)}` inside `[0, spread]`. Unit weights.
pub fn gen_random_unit(
    n: usize,
    tau: usize,
    delta: usize,
    k: usize,
    seed: u64,
    spread: Rational,
) -> Result<TemporalIntervalInstance> {
    gen_random_unit_weighted(n, tau, delta, k, seed, spread, None)
}

/// As [`gen_random_unit`], with integer weights in `1..=max_weight` when given.
pub fn gen_random_unit_weighted(
    n: usize,
    tau: usize,
    delta: usize,
    k: usize,
    seed: u64,
    spread: Rational,
    max_weight: Option<u32>,
) -> Result<TemporalIntervalInstance> {
    check_sizes(n, tau, delta)?;
    if spread <= Rational::ZERO {
        return Err(Error::InvalidParameter("spread must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let steps = (spread * Rational::from(n + 1)).floor();
    let grid = Rational::new(1, n as i128 + 1);
    let vs = vertices(n, &mut rng, max_weight);
    let layers = (0..tau)
        .map(|_| unit_layer((0..n).map(|_| grid * Rational::integer(rng.gen_range(0..=steps)))))
        .collect();
    TemporalIntervalInstance::new(vs, delta, k, layers, true)
}

/// Random order-preserving unit instance: one random vertex order, and in
/// every layer right endpoints strictly increase along it with random gaps
/// from `{m/(n+1) : 1 <= m <= n+1}`. Unit weights.
pub fn gen_order_preserving(n: usize, tau: usize, delta: usize, k: usize, seed: u64) -> Result<TemporalIntervalInstance> {
    gen_order_preserving_weighted(n, tau, delta, k, seed, None)
}

pub fn gen_order_preserving_weighted(
    n: usize,
    tau: usize,
    delta: usize,
    k: usize,
    seed: u64,
    max_weight: Option<u32>,
) -> Result<TemporalIntervalInstance> {
    check_sizes(n, tau, delta)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vs = vertices(n, &mut rng, max_weight);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let grid = Rational::new(1, n as i128 + 1);
    let layers = (0..tau)
        .map(|_| {
            let mut lefts = vec![Rational::ZERO; n];
            let mut at = Rational::ZERO;
            for &v in &order {
                at += grid * Rational::from(rng.gen_range(1..=n + 1));
                lefts[v] = at;
            }
            unit_layer(lefts)
        })
        .collect();
    TemporalIntervalInstance::new(vs, delta, k, layers, true)
}

/// Checks that all strings are permutations of one alphabet; returns the
/// alphabet sorted.
fn alphabet<S: AsRef<str>>(perms: &[S]) -> Result<Vec<char>> {
    let first = perms
        .first()
        .ok_or_else(|| Error::InvalidParameter("at least one permutation required".into()))?;
    let sigma: BTreeSet<char> = first.as_ref().chars().collect();
    for p in perms {
        let chars: Vec<char> = p.as_ref().chars().collect();
        let set: BTreeSet<char> = chars.iter().copied().collect();
        if set.len() != chars.len() || set != sigma || chars.iter().any(|c| c.is_whitespace()) {
            return Err(Error::NotPermutation(p.as_ref().to_string()));
        }
    }
    if sigma.is_empty() {
        return Err(Error::InvalidParameter("empty alphabet".into()));
    }
    Ok(sigma.into_iter().collect())
}

/// Hardness gadget for a set of permutations: one alphabet vertex per
/// character (indices `0..n`, named by the character), then `n` left and
/// `n` right fixating cliques of `n` vertices each (`L{j}_{h}`, `R{j}_{h}`).
/// Layer `t` places the alphabet vertex at 1-based position `i` of the
/// `t`-th string at `[1+εi, 2+εi]` with `ε = 1/(n+2)`. Δ = 1.
pub fn gen_lcsp_gadget<S: AsRef<str>>(perms: &[S]) -> Result<TemporalIntervalInstance> {
    let sigma = alphabet(perms)?;
    let n = sigma.len();
    let eps = Rational::new(1, n as i128 + 2);
    let mut vs: Vec<Vertex> = sigma.iter().map(|c| Vertex::new(c.to_string())).collect();
    for side in ["L", "R"] {
        for j in 1..=n {
            for h in 1..=n {
                vs.push(Vertex::new(format!("{side}{j}_{h}")));
            }
        }
    }
    let fixating = |side: usize, j: usize| -> Rational {
        if side == 0 {
            eps * Rational::from(j - 1)
        } else {
            Rational::integer(2) + eps * Rational::from(j + 1)
        }
    };
    let layers = perms
        .iter()
        .map(|p| {
            let mut lefts = vec![Rational::ZERO; n];
            for (i, c) in p.as_ref().chars().enumerate() {
                let v = sigma.binary_search(&c).expect("checked alphabet");
                lefts[v] = Rational::ONE + eps * Rational::from(i + 1);
            }
            for side in 0..2 {
                for j in 1..=n {
                    lefts.extend(std::iter::repeat(fixating(side, j)).take(n));
                }
            }
            unit_layer(lefts)
        })
        .collect();
    TemporalIntervalInstance::new(vs, 1, 0, layers, true)
}

/// Length of a longest common subsequence of permutations of one alphabet.
/// Dynamic programming for up to three strings, otherwise exhaustive over
/// subsequences of the first string.
pub fn lcs_permutations<S: AsRef<str>>(perms: &[S]) -> Result<usize> {
    alphabet(perms)?;
    let strs: Vec<Vec<char>> = perms.iter().map(|p| p.as_ref().chars().collect()).collect();
    let n = strs[0].len();
    Ok(match strs.len() {
        1 => n,
        2 => {
            let (a, b) = (&strs[0], &strs[1]);
            let mut dp = vec![vec![0usize; n + 1]; n + 1];
            for i in 1..=n {
                for j in 1..=n {
                    dp[i][j] = if a[i - 1] == b[j - 1] {
                        dp[i - 1][j - 1] + 1
                    } else {
                        dp[i - 1][j].max(dp[i][j - 1])
                    };
                }
            }
            dp[n][n]
        }
        3 => {
            let (a, b, c) = (&strs[0], &strs[1], &strs[2]);
            let mut dp = vec![vec![vec![0usize; n + 1]; n + 1]; n + 1];
            for i in 1..=n {
                for j in 1..=n {
                    for l in 1..=n {
                        dp[i][j][l] = if a[i - 1] == b[j - 1] && b[j - 1] == c[l - 1] {
                            dp[i - 1][j - 1][l - 1] + 1
                        } else {
                            dp[i - 1][j][l].max(dp[i][j - 1][l]).max(dp[i][j][l - 1])
                        };
                    }
                }
            }
            dp[n][n][n]
        }
        _ => {
            if n > 24 {
                return Err(Error::LimitExceeded { n, limit: 24 });
            }
            let pos: Vec<HashMap<char, usize>> = strs
                .iter()
                .map(|s| s.iter().enumerate().map(|(i, &c)| (c, i)).collect())
                .collect();
            (0u32..1 << n)
                .filter(|mask| {
                    let sub: Vec<char> = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| strs[0][i]).collect();
                    pos.iter()
                        .all(|p| sub.windows(2).all(|w| p[&w[0]] < p[&w[1]]))
                })
                .map(u32::count_ones)
                .max()
                .unwrap_or(0) as usize
        }
    })
}
