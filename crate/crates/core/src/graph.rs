//! Static undirected graphs over dense vertex indices.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct StaticGraph {
    adj: Vec<BTreeSet<usize>>,
}

impl StaticGraph {
    pub fn empty(n: usize) -> Self {
        StaticGraph {
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an edge list. Self-loops and out-of-range
    /// endpoints are rejected; repeated edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = StaticGraph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop on vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn neighbors(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Closed neighborhood `N[v]`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.adj[v].iter().copied().collect();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, set)| set.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges().collect()
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Subgraph induced on `keep`, re-indexed densely in the order given.
    pub fn induced(&self, keep: &[usize]) -> StaticGraph {
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            position[v] = i;
        }
        let mut g = StaticGraph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = position[w];
                if j != usize::MAX && i < j {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

fn check_same_order(g1: &StaticGraph, g2: &StaticGraph) -> Result<()> {
    if g1.n() != g2.n() {
        return Err(Error::VertexCountMismatch {
            left: g1.n(),
            right: g2.n(),
        });
    }
    Ok(())
}

/// Edge-intersection graph: same vertex set, `E1 ∩ E2`.
pub fn edge_intersection(g1: &StaticGraph, g2: &StaticGraph) -> Result<StaticGraph> {
    check_same_order(g1, g2)?;
    let adj = g1
        .adj
        .iter()
        .zip(&g2.adj)
        .map(|(a, b)| a.intersection(b).copied().collect())
        .collect();
    Ok(StaticGraph { adj })
}

/// Edge-union graph: same vertex set, `E1 ∪ E2`.
pub fn edge_union(g1: &StaticGraph, g2: &StaticGraph) -> Result<StaticGraph> {
    check_same_order(g1, g2)?;
    let adj = g1
        .adj
        .iter()
        .zip(&g2.adj)
        .map(|(a, b)| a.union(b).copied().collect())
        .collect();
    Ok(StaticGraph { adj })
}
