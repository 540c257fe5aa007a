//! Unit interval recognition through the closed-neighborhood matrix.

use std::fmt;

use super::c1p::{c1p_test, BinaryMatrix, C1pResult};
use crate::graph::StaticGraph;
use crate::instance::{Interval, IntervalModel};
use crate::rational::Rational;

/// Refusal from [`recognize_unit_interval`]. `witness` is a set of vertices
/// whose closed-neighborhood columns are not C1P.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitFailure {
    pub witness: Vec<usize>,
}

impl fmt::Display for UnitFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not a unit interval graph (witness vertices {:?})", self.witness)
    }
}

impl std::error::Error for UnitFailure {}

/// An umbrella ordering of `g`, if `g` is a unit interval graph.
pub fn umbrella_ordering(g: &StaticGraph) -> Result<Vec<usize>, UnitFailure> {
    let rows = (0..g.n()).map(|v| g.closed_neighborhood(v)).collect();
    match c1p_test(&BinaryMatrix::new(g.n(), rows)) {
        C1pResult::Ordering(order) => Ok(order),
        C1pResult::Witness(witness) => Err(UnitFailure { witness }),
    }
}

/// A model with all intervals of length 1 realizing `g`.
pub fn recognize_unit_interval(g: &StaticGraph) -> Result<IntervalModel, UnitFailure> {
    let n = g.n();
    let order = umbrella_ordering(g)?;
    let mut scale = n as i64 + 1;
    for _ in 0..8 {
        if let Some(pos) = place(g, &order, scale) {
            let model = IntervalModel::new(
                pos.iter()
                    .map(|&y| {
                        let l = Rational::new(y as i128, scale as i128);
                        Interval::new(l, l + Rational::ONE)
                    })
                    .collect(),
            )
            .expect("unit intervals are well formed");
            if model.graph() == *g {
                return Ok(model);
            }
        }
        scale *= 2;
    }
    Err(UnitFailure { witness: order })
}

/// Integer left endpoints (in units of `1/scale`) along `order`: adjacent
/// pairs at most `scale` apart, non-adjacent pairs more than `scale` apart.
/// Solved as difference constraints with Bellman-Ford.
fn place(g: &StaticGraph, order: &[usize], scale: i64) -> Option<Vec<i64>> {
    let n = order.len();
    // Edge (a, b, w): y[b] - y[a] <= w, over positions in `order`.
    let mut cons: Vec<(usize, usize, i64)> = Vec::new();
    for i in 0..n {
        if i + 1 < n {
            cons.push((i + 1, i, -1));
        }
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                cons.push((i, j, scale));
            } else {
                cons.push((j, i, -(scale + 1)));
            }
        }
    }
    let mut dist = vec![0i64; n];
    for round in 0..=n {
        let mut changed = false;
        for &(a, b, w) in &cons {
            if dist[a] + w < dist[b] {
                dist[b] = dist[a] + w;
                changed = true;
            }
        }
        if !changed {
            let min = dist.iter().copied().min().unwrap_or(0);
            let mut pos = vec![0; n];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = dist[i] - min;
            }
            return Some(pos);
        }
        if round == n {
            return None;
        }
    }
    None
}
