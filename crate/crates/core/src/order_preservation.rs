//! Recognition of order-preserving temporal interval graphs and the
//! interval model of their conflict graph.

use crate::error::{Error, Result};
use crate::graph::StaticGraph;
use crate::instance::{Interval, IntervalModel, Layer, TemporalIntervalInstance};
use crate::interval::{
    consecutive_ordering, maximal_cliques, maximal_cliques_abstract, normalized_lefts, CliqueMatrix, CliqueRow,
    REOrdering,
};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderPreservationReport {
    pub is_order_preserving: bool,
    /// A common ordering of all layers, when one exists.
    pub ordering: Option<REOrdering>,
    /// An inclusion-minimal vertex set inducing a non-order-preserving
    /// sub-instance; empty when the instance is order preserving.
    pub witness: Vec<usize>,
}

/// Maximal cliques of every layer, in sweep order.
pub fn layer_cliques(inst: &TemporalIntervalInstance) -> Result<Vec<Vec<Vec<usize>>>> {
    inst.layers()
        .iter()
        .enumerate()
        .map(|(t, layer)| match layer {
            Layer::Model(m) => Ok(maximal_cliques(m)),
            Layer::Edges(g) => maximal_cliques_abstract(g).map_err(|_| Error::NotInterval(t + 1)),
        })
        .collect()
}

/// Maximal cliques of all layers pooled into one matrix (rows deduplicated,
/// tagged with the first layer they occur in).
pub fn pooled_clique_matrix(inst: &TemporalIntervalInstance) -> Result<CliqueMatrix> {
    let rows = layer_cliques(inst)?
        .into_iter()
        .enumerate()
        .flat_map(|(t, cliques)| cliques.into_iter().map(move |vertices| CliqueRow { layer: t + 1, vertices }))
        .collect();
    Ok(CliqueMatrix::new(inst.names(&(0..inst.n()).collect::<Vec<_>>()), rows))
}

/// A common ordering of the layers (each maximal clique consecutive), or
/// `None`. No unit requirement.
pub(crate) fn common_ordering(inst: &TemporalIntervalInstance) -> Result<Option<REOrdering>> {
    let matrix = pooled_clique_matrix(inst)?;
    let rows: Vec<Vec<usize>> = matrix.rows().iter().map(|r| r.vertices.clone()).collect();
    let all: Vec<usize> = (0..inst.n()).collect();
    Ok(consecutive_ordering(inst.n(), &rows, &all).map(|o| REOrdering::new(o).expect("permutation")))
}

/// Greedily drops vertices while the induced sub-instance stays
/// non-order-preserving. Order preservation is hereditary, so the result is
/// inclusion-minimal.
fn minimal_witness(inst: &TemporalIntervalInstance, column_hint: Vec<usize>) -> Result<Vec<usize>> {
    let mut witness = if common_ordering(&inst.induce(&column_hint))?.is_none() {
        column_hint
    } else {
        (0..inst.n()).collect()
    };
    let mut i = 0;
    while i < witness.len() {
        let mut trial = witness.clone();
        trial.remove(i);
        if common_ordering(&inst.induce(&trial))?.is_none() {
            witness = trial;
        } else {
            i += 1;
        }
    }
    Ok(witness)
}

pub(crate) fn check_order_preserving(inst: &TemporalIntervalInstance) -> Result<OrderPreservationReport> {
    let matrix = pooled_clique_matrix(inst)?;
    match matrix.c1p() {
        crate::interval::C1pResult::Ordering(order) => {
            let ord = REOrdering::new(order).expect("permutation");
            for (t, g) in inst.layer_graphs().iter().enumerate() {
                if let Some((u, v)) = ord.re_violation(g) {
                    return Err(Error::OrderingIncompatible { layer: t + 1, u, v });
                }
                debug_assert!(ord.is_proper_ordering_of(g));
            }
            Ok(OrderPreservationReport {
                is_order_preserving: true,
                ordering: Some(ord),
                witness: Vec::new(),
            })
        }
        crate::interval::C1pResult::Witness(cols) => Ok(OrderPreservationReport {
            is_order_preserving: false,
            ordering: None,
            witness: minimal_witness(inst, cols)?,
        }),
    }
}

/// Decides whether all layers agree on one ordering, via the consecutive
/// ones property of the pooled clique matrix. Unit instances only.
pub fn recognize_order_preserving(inst: &TemporalIntervalInstance) -> Result<OrderPreservationReport> {
    if !inst.is_unit() {
        return Err(Error::NotUnit);
    }
    check_order_preserving(inst)
}

/// Tries all `n!` orderings; returns the first (in lexicographic order) in
/// which every edge of every layer spans a run of pairwise adjacent vertices.
pub fn common_ordering_exhaustive(inst: &TemporalIntervalInstance, limit: usize) -> Result<Option<REOrdering>> {
    if inst.n() > limit {
        return Err(Error::LimitExceeded { n: inst.n(), limit });
    }
    let layers = inst.layer_graphs();
    let mut perm: Vec<usize> = (0..inst.n()).collect();
    loop {
        if layers.iter().all(|g| is_umbrella(g, &perm)) {
            return Ok(Some(REOrdering::new(perm).expect("permutation")));
        }
        if !next_permutation(&mut perm) {
            return Ok(None);
        }
    }
}

/// `u < w < v` in `perm` and `uv` an edge imply `uw` and `wv` are edges.
fn is_umbrella(g: &StaticGraph, perm: &[usize]) -> bool {
    for i in 0..perm.len() {
        for j in i + 2..perm.len() {
            if g.has_edge(perm[i], perm[j])
                && perm[i + 1..j]
                    .iter()
                    .any(|&w| !g.has_edge(perm[i], w) || !g.has_edge(w, perm[j]))
            {
                return false;
            }
        }
    }
    true
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
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

/// Normalized left endpoints of every layer along `ord`.
pub fn normalized_layer_lefts(inst: &TemporalIntervalInstance, ord: &REOrdering) -> Result<Vec<Vec<usize>>> {
    inst.layer_graphs()
        .iter()
        .enumerate()
        .map(|(t, g)| {
            normalized_lefts(g, ord).map_err(|e| match e {
                Error::OrderingIncompatible { u, v, .. } => Error::OrderingIncompatible { layer: t + 1, u, v },
                other => other,
            })
        })
        .collect()
}

/// Interval model of the conflict graph: `right = index(v)` and `left` the
/// minimum over windows of the maximum normalized left in the window.
pub fn conflict_interval_model(inst: &TemporalIntervalInstance, ord: &REOrdering) -> Result<IntervalModel> {
    let lefts = normalized_layer_lefts(inst, ord)?;
    let windows = inst.semantics().windows(inst.tau(), inst.delta());
    let intervals = (0..inst.n())
        .map(|v| {
            let left = windows
                .iter()
                .map(|w| w.clone().map(|t| lefts[t - 1][v]).max().expect("nonempty window"))
                .min()
                .expect("at least one window");
            Interval::new(Rational::from(left), Rational::from(ord.index(v)))
        })
        .collect();
    IntervalModel::new(intervals)
}
