//! Right-endpoint orderings and the normalized model algebra.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::StaticGraph;
use crate::instance::{Interval, IntervalModel};
use crate::rational::Rational;

/// A total order on vertices `0..n`, read as the order of right endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct REOrdering {
    perm: Vec<usize>,
    pos: Vec<usize>,
}

impl REOrdering {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in perm.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::InvalidParameter(format!("ordering is not a permutation of 0..{n}")));
            }
            pos[v] = i;
        }
        Ok(REOrdering { perm, pos })
    }

    pub fn identity(n: usize) -> Self {
        REOrdering {
            perm: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    /// Orders vertices by right endpoint, ties by index.
    pub fn from_model(model: &IntervalModel) -> Self {
        let mut perm: Vec<usize> = (0..model.len()).collect();
        perm.sort_by(|&a, &b| model.interval(a).right.cmp(&model.interval(b).right).then(a.cmp(&b)));
        REOrdering::new(perm).expect("sorted indices form a permutation")
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.perm
    }

    /// 1-based position of `v`.
    pub fn index(&self, v: usize) -> usize {
        self.pos[v] + 1
    }

    pub fn reversed(&self) -> Self {
        REOrdering::new(self.perm.iter().rev().copied().collect()).expect("reversal is a permutation")
    }

    /// Whether the model's right endpoints strictly increase along the order.
    pub fn agrees_with(&self, model: &IntervalModel) -> bool {
        self.len() == model.len()
            && self
                .perm
                .windows(2)
                .all(|w| model.interval(w[0]).right < model.interval(w[1]).right)
    }

    /// First pair `(u, v)` showing this cannot be a right-endpoint order of
    /// `g`: `u` precedes `w` precedes `v`, `uv` is an edge and `wv` is not.
    pub fn re_violation(&self, g: &StaticGraph) -> Option<(usize, usize)> {
        for (j, &v) in self.perm.iter().enumerate() {
            let first = g.neighbors(v).iter().map(|&u| self.pos[u]).filter(|&p| p < j).min();
            if let Some(first) = first {
                for &w in &self.perm[first + 1..j] {
                    if !g.has_edge(w, v) {
                        return Some((self.perm[first], v));
                    }
                }
            }
        }
        None
    }

    pub fn is_re_ordering_of(&self, g: &StaticGraph) -> bool {
        self.len() == g.n() && self.re_violation(g).is_none()
    }

    /// Umbrella property: every edge spans a clique-consecutive stretch,
    /// so both endpoints of a realizing model can follow the order.
    pub fn is_proper_ordering_of(&self, g: &StaticGraph) -> bool {
        self.is_re_ordering_of(g) && self.reversed().is_re_ordering_of(g)
    }
}

impl fmt::Display for REOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perm.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Normalized left endpoints of `g` along `ord`: the smallest index in `N[v]`.
pub(crate) fn normalized_lefts(g: &StaticGraph, ord: &REOrdering) -> Result<Vec<usize>> {
    if g.n() != ord.len() {
        return Err(Error::OrderingSize {
            expected: g.n(),
            found: ord.len(),
        });
    }
    if let Some((u, v)) = ord.re_violation(g) {
        return Err(Error::OrderingIncompatible { layer: 0, u, v });
    }
    Ok((0..g.n())
        .map(|v| g.closed_neighborhood(v).into_iter().map(|u| ord.index(u)).min().expect("v in N[v]"))
        .collect())
}

fn model_from_lefts(lefts: &[usize], ord: &REOrdering) -> IntervalModel {
    IntervalModel::new(
        lefts
            .iter()
            .enumerate()
            .map(|(v, &l)| Interval::new(Rational::from(l), Rational::from(ord.index(v))))
            .collect(),
    )
    .expect("left never exceeds own index")
}

/// Rebuilds `model` with `right(v) = index(v)` and `left(v)` the smallest
/// index among `v` and its neighbors. Same graph, agrees with `ord`.
pub fn normalize_to_ordering(model: &IntervalModel, ord: &REOrdering) -> Result<IntervalModel> {
    normalize_graph(&model.graph(), ord)
}

/// As [`normalize_to_ordering`], starting from the abstract graph.
pub fn normalize_graph(g: &StaticGraph, ord: &REOrdering) -> Result<IntervalModel> {
    Ok(model_from_lefts(&normalized_lefts(g, ord)?, ord))
}

fn combine(m1: &IntervalModel, m2: &IntervalModel, pick: fn(Rational, Rational) -> Rational) -> Result<IntervalModel> {
    if m1.len() != m2.len() {
        return Err(Error::VertexCountMismatch {
            left: m1.len(),
            right: m2.len(),
        });
    }
    let intervals = (0..m1.len())
        .map(|v| {
            let (a, b) = (m1.interval(v), m2.interval(v));
            if a.right != b.right {
                return Err(Error::NotNormalized(v));
            }
            Ok(Interval::new(pick(a.left, b.left), a.right))
        })
        .collect::<Result<Vec<_>>>()?;
    IntervalModel::new(intervals)
}

/// Per vertex `[max(l1, l2), r]`. Induces the edge intersection.
pub fn intersect_models(m1: &IntervalModel, m2: &IntervalModel) -> Result<IntervalModel> {
    combine(m1, m2, std::cmp::max)
}

/// Per vertex `[min(l1, l2), r]`. Induces the edge union.
pub fn union_models(m1: &IntervalModel, m2: &IntervalModel) -> Result<IntervalModel> {
    combine(m1, m2, std::cmp::min)
}
