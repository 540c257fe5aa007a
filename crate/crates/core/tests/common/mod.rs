#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use temporal_tis::generators::{gen_order_preserving_weighted, gen_random_unit_weighted};
use temporal_tis::instance::{Interval, IntervalModel, TemporalIntervalInstance};
use temporal_tis::rational::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random weighted unit instance with n in `n_range`, tau in 2..=4 and
/// delta in 1..=2. The left endpoint grid width varies with the seed.
pub fn unit_instance(seed: u64, n_min: usize, n_max: usize, tau_max: usize) -> TemporalIntervalInstance {
    let mut r = rng(seed ^ 0x5eed);
    let n = r.gen_range(n_min..=n_max);
    let tau = r.gen_range(2..=tau_max);
    let delta = r.gen_range(1..=2.min(tau));
    let spread = Rational::new(r.gen_range(n as i128..=3 * n as i128 + 2), 4);
    gen_random_unit_weighted(n, tau, delta, 0, seed, spread, Some(5)).expect("valid parameters")
}

pub fn op_instance(seed: u64, n_max: usize) -> TemporalIntervalInstance {
    let mut r = rng(seed ^ 0x0b);
    let n = r.gen_range(1..=n_max);
    let tau = r.gen_range(1..=4);
    let delta = r.gen_range(1..=tau);
    gen_order_preserving_weighted(n, tau, delta, 0, seed, Some(6)).expect("valid parameters")
}

/// Interval model whose right endpoints follow `order` (rights 1..=n) with
/// random left endpoints, so `order` is a right-endpoint ordering of it.
pub fn re_model(order: &[usize], r: &mut ChaCha8Rng) -> IntervalModel {
    let n = order.len();
    let mut iv = vec![Interval::new(Rational::ZERO, Rational::ZERO); n];
    for (i, &v) in order.iter().enumerate() {
        let right = Rational::from(i + 1);
        let left = Rational::new(r.gen_range(0..=2 * (i as i128 + 1)), 2);
        iv[v] = Interval::new(left, right);
    }
    IntervalModel::new(iv).unwrap()
}

pub fn random_order(n: usize, r: &mut ChaCha8Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(r);
    p
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Whether some permutation of `cols` makes every row (restricted to
/// `cols`) consecutive.
pub fn c1p_bruteforce(cols: &[usize], rows: &[Vec<usize>]) -> bool {
    let mut perm: Vec<usize> = cols.to_vec();
    perm.sort_unstable();
    let width = perm.iter().max().map_or(0, |m| m + 1);
    let masks: Vec<Vec<bool>> = rows
        .iter()
        .map(|row| {
            let mut m = vec![false; width];
            for &c in row {
                if c < width {
                    m[c] = true;
                }
            }
            m
        })
        .collect();
    loop {
        let ok = masks.iter().all(|m| {
            let ones: Vec<usize> = perm.iter().enumerate().filter(|(_, &c)| m[c]).map(|(i, _)| i).collect();
            ones.len() < 2 || ones[ones.len() - 1] - ones[0] + 1 == ones.len()
        });
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

/// LCS of permutations as the longest chain of characters whose positions
/// increase in every string.
pub fn lcs_by_chains(perms: &[String]) -> usize {
    let first: Vec<char> = perms[0].chars().collect();
    let pos: Vec<Vec<usize>> = first
        .iter()
        .map(|c| perms.iter().map(|p| p.chars().position(|x| x == *c).unwrap()).collect())
        .collect();
    let mut best = vec![1usize; first.len()];
    for i in 0..first.len() {
        for j in 0..i {
            if pos[j].iter().zip(&pos[i]).all(|(a, b)| a < b) {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

pub fn all_permutations(alphabet: &str) -> Vec<String> {
    let chars: Vec<char> = alphabet.chars().collect();
    let mut idx: Vec<usize> = (0..chars.len()).collect();
    let mut out = vec![];
    loop {
        out.push(idx.iter().map(|&i| chars[i]).collect());
        if !next_permutation(&mut idx) {
            return out;
        }
    }
}
