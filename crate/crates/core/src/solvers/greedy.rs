//! Maximum neighborhood weight greedy.

use crate::conflict::conflict_graph;
use crate::instance::TemporalIntervalInstance;

use super::{Algorithm, Solution};

/// One greedy step: the picked vertex and the remaining part of its closed
/// neighborhood that was removed with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyStep {
    pub picked: usize,
    pub removed: Vec<usize>,
}

pub fn solve_greedy(inst: &TemporalIntervalInstance) -> Solution {
    solve_greedy_traced(inst).0
}

/// Repeatedly picks a maximum-weight remaining vertex (smallest index on
/// ties) and removes its closed neighborhood in the conflict graph.
pub fn solve_greedy_traced(inst: &TemporalIntervalInstance) -> (Solution, Vec<GreedyStep>) {
    let g = conflict_graph(inst);
    let mut alive = vec![true; inst.n()];
    let mut steps = Vec::new();
    loop {
        let pick = (0..inst.n())
            .filter(|&v| alive[v])
            .max_by(|&a, &b| inst.weight(a).cmp(&inst.weight(b)).then(b.cmp(&a)));
        let Some(v) = pick else { break };
        let removed: Vec<usize> = g.closed_neighborhood(v).into_iter().filter(|&u| alive[u]).collect();
        for &u in &removed {
            alive[u] = false;
        }
        steps.push(GreedyStep { picked: v, removed });
    }
    let set = steps.iter().map(|s| s.picked).collect();
    (Solution::new(inst, Algorithm::Greedy, set), steps)
}
