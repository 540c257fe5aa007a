//! Branch and bound over the conflict graph.

use crate::conflict::conflict_graph;
use crate::error::{Error, Result};
use crate::graph::StaticGraph;
use crate::instance::TemporalIntervalInstance;
use crate::rational::Rational;

use super::{Algorithm, Solution};

pub const DEFAULT_BRUTEFORCE_LIMIT: usize = 30;

pub fn solve_exact_bruteforce(inst: &TemporalIntervalInstance) -> Result<Solution> {
    solve_exact_bruteforce_with_limit(inst, DEFAULT_BRUTEFORCE_LIMIT)
}

/// Maximum-weight independent set of the conflict graph. `limit` is capped
/// at 64.
pub fn solve_exact_bruteforce_with_limit(inst: &TemporalIntervalInstance, limit: usize) -> Result<Solution> {
    let limit = limit.min(64);
    if inst.n() > limit {
        return Err(Error::LimitExceeded { n: inst.n(), limit });
    }
    let g = conflict_graph(inst);
    let set = max_weight_independent_set(&g, &inst.weights());
    Ok(Solution::new(inst, Algorithm::Exact, set))
}

struct Search<'a> {
    adj: Vec<u64>,
    weights: &'a [Rational],
    best: (Rational, u32),
    best_set: u64,
}

impl Search<'_> {
    fn mask_weight(&self, mut m: u64) -> Rational {
        let mut w = Rational::ZERO;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            w += self.weights[v];
            m &= m - 1;
        }
        w
    }

    fn run(&mut self, cand: u64, chosen: u64, weight: Rational) {
        let card = chosen.count_ones();
        let bound = (weight + self.mask_weight(cand), card + cand.count_ones());
        if bound <= self.best {
            return;
        }
        // Highest degree inside the candidates, ties to the smallest index.
        let mut pick = None;
        let mut top = 0;
        let mut m = cand;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            let d = (self.adj[v] & cand).count_ones();
            if d > top {
                top = d;
                pick = Some(v);
            }
            m &= m - 1;
        }
        let Some(v) = pick else {
            // Candidates are pairwise non-adjacent: take them all.
            self.best = bound;
            self.best_set = chosen | cand;
            return;
        };
        let bit = 1u64 << v;
        self.run(cand & !bit & !self.adj[v], chosen | bit, weight + self.weights[v]);
        self.run(cand & !bit, chosen, weight);
    }
}

/// Maximum-weight independent set of `g` (at most 64 vertices), compared by
/// weight then cardinality. Weights must be non-negative.
pub fn max_weight_independent_set(g: &StaticGraph, weights: &[Rational]) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 64, "branch and bound handles at most 64 vertices");
    let adj = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect();
    let mut s = Search {
        adj,
        weights,
        best: (Rational::ZERO, 0),
        best_set: 0,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    s.run(all, 0, Rational::ZERO);
    (0..n).filter(|&v| s.best_set >> v & 1 == 1).collect()
}

/// Size of a largest independent set of `g` inside `subset`.
pub fn max_independent_subset_size(g: &StaticGraph, subset: &[usize]) -> usize {
    let sub = g.induced(subset);
    max_weight_independent_set(&sub, &vec![Rational::ONE; sub.n()]).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exhaustive(g: &StaticGraph, w: &[Rational]) -> Rational {
        (0u32..1 << g.n())
            .map(|m| (0..g.n()).filter(|&v| m >> v & 1 == 1).collect::<Vec<_>>())
            .filter(|s| g.is_independent(s))
            .map(|s| s.iter().map(|&v| w[v]).sum())
            .max()
            .unwrap()
    }

    #[test]
    fn clique_picks_heaviest() {
        let g = StaticGraph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let w = [Rational::ONE, Rational::integer(5), Rational::integer(2)];
        assert_eq!(max_weight_independent_set(&g, &w), vec![1]);
    }

    #[test]
    fn star_takes_leaves() {
        let g = StaticGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let w = [Rational::integer(2), Rational::ONE, Rational::ONE, Rational::ONE];
        assert_eq!(max_weight_independent_set(&g, &w), vec![1, 2, 3]);
        assert_eq!(max_independent_subset_size(&g, &[0, 1, 2]), 2);
    }

    #[test]
    fn cycle_matches_enumeration() {
        let g = StaticGraph::from_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        let w: Vec<Rational> = (1..=7).map(Rational::integer).collect();
        let s = max_weight_independent_set(&g, &w);
        assert!(g.is_independent(&s));
        assert_eq!(s.iter().map(|&v| w[v]).sum::<Rational>(), exhaustive(&g, &w));
    }
}
