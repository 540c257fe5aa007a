//! Conflict graphs over sliding windows of layers and direct
//! Δ-independence checking.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{edge_intersection, edge_union, StaticGraph};
use crate::instance::TemporalIntervalInstance;
use crate::solvers::bruteforce::max_independent_subset_size;

/// How windows of consecutive layers are formed.
///
/// `Figure`: windows of exactly Δ layers starting at `1..=τ-Δ+1`.
/// `Formula`: windows `i..=i+Δ` (Δ+1 layers) starting at `1..=τ-Δ`; when
/// that range is empty a single window covers all layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum WindowSemantics {
    #[default]
    Figure,
    Formula,
}

impl WindowSemantics {
    /// Windows as 1-based inclusive layer ranges.
    pub fn windows(self, tau: usize, delta: usize) -> Vec<RangeInclusive<usize>> {
        match self {
            WindowSemantics::Figure => {
                let len = delta.clamp(1, tau);
                (1..=tau - len + 1).map(|i| i..=i + len - 1).collect()
            }
            WindowSemantics::Formula => {
                if delta >= tau {
                    vec![1..=tau]
                } else {
                    (1..=tau - delta).map(|i| i..=(i + delta).min(tau)).collect()
                }
            }
        }
    }

    pub fn window_length(self, tau: usize, delta: usize) -> usize {
        self.windows(tau, delta).first().map_or(0, |w| w.end() - w.start() + 1)
    }

    pub fn window_count(self, tau: usize, delta: usize) -> usize {
        self.windows(tau, delta).len()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            WindowSemantics::Figure => "figure",
            WindowSemantics::Formula => "formula",
        }
    }
}

impl fmt::Display for WindowSemantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for WindowSemantics {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "figure" => Ok(WindowSemantics::Figure),
            "formula" => Ok(WindowSemantics::Formula),
            _ => Err(Error::InvalidParameter(format!("unknown window semantics `{s}`"))),
        }
    }
}

/// Union over windows of the edge-intersection of the window's layers.
pub fn conflict_graph(inst: &TemporalIntervalInstance) -> StaticGraph {
    let layers = inst.layer_graphs();
    conflict_graph_of_layers(&layers, inst.delta(), inst.semantics())
}

pub(crate) fn conflict_graph_of_layers(
    layers: &[StaticGraph],
    delta: usize,
    semantics: WindowSemantics,
) -> StaticGraph {
    let n = layers.first().map_or(0, StaticGraph::n);
    let mut out = StaticGraph::empty(n);
    for window in semantics.windows(layers.len(), delta) {
        let mut acc = layers[*window.start() - 1].clone();
        for t in window.clone().skip(1) {
            acc = edge_intersection(&acc, &layers[t - 1]).expect("layers share a vertex set");
        }
        out = edge_union(&out, &acc).expect("layers share a vertex set");
    }
    out
}

/// For one pair, a layer lacking the edge in each window (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCertificate {
    pub u: usize,
    pub v: usize,
    pub witness_layers: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    /// 1-based inclusive window in which every layer has the edge.
    pub window: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependenceReport {
    pub independent: bool,
    pub certificates: Vec<PairCertificate>,
    pub violation: Option<Violation>,
}

/// Checks Δ-independence of `set` straight from the layers: every pair must
/// be non-adjacent in at least one layer of every window.
pub fn delta_independence_check(inst: &TemporalIntervalInstance, set: &[usize]) -> Result<IndependenceReport> {
    if let Some(&bad) = set.iter().find(|&&v| v >= inst.n()) {
        return Err(Error::UnknownVertex(format!("#{bad}")));
    }
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    let layers = inst.layer_graphs();
    let windows = inst.semantics().windows(inst.tau(), inst.delta());
    let mut certificates = Vec::new();
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            let mut witness_layers = Vec::with_capacity(windows.len());
            for w in &windows {
                match w.clone().find(|&t| !layers[t - 1].has_edge(u, v)) {
                    Some(t) => witness_layers.push(t),
                    None => {
                        return Ok(IndependenceReport {
                            independent: false,
                            certificates,
                            violation: Some(Violation {
                                u,
                                v,
                                window: (*w.start(), *w.end()),
                            }),
                        })
                    }
                }
            }
            certificates.push(PairCertificate { u, v, witness_layers });
        }
    }
    Ok(IndependenceReport {
        independent: true,
        certificates,
        violation: None,
    })
}

/// `2^len · count` for the instance's window layout; with the default
/// semantics this is `2^Δ · (τ-Δ+1)`.
pub fn neighborhood_bound(inst: &TemporalIntervalInstance) -> u64 {
    let s = inst.semantics();
    let len = s.window_length(inst.tau(), inst.delta());
    (1u64 << len) * s.window_count(inst.tau(), inst.delta()) as u64
}

/// Size of a maximum independent set inside `N[v]` of the conflict graph.
pub fn max_independent_in_closed_neighborhood(conflict: &StaticGraph, v: usize) -> usize {
    max_independent_subset_size(conflict, &conflict.closed_neighborhood(v))
}

/// Whether the largest independent set inside `N[v]` of the conflict graph
/// stays within the neighborhood bound. Only defined for unit model
/// instances.
pub fn neighborhood_is_bound_check(inst: &TemporalIntervalInstance, v: usize) -> Result<bool> {
    if !inst.is_unit() || inst.mode() != crate::instance::Mode::Model {
        return Err(Error::NotUnit);
    }
    if v >= inst.n() {
        return Err(Error::UnknownVertex(format!("#{v}")));
    }
    let g = conflict_graph(inst);
    Ok(max_independent_in_closed_neighborhood(&g, v) as u64 <= neighborhood_bound(inst))
}
