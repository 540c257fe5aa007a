//! Maximal cliques of interval layers and the pooled clique matrix.

use std::collections::BTreeSet;
use std::fmt;

use super::c1p::{c1p_test, BinaryMatrix, C1pResult};
use crate::graph::StaticGraph;
use crate::instance::IntervalModel;

/// Maximal cliques in sweep order. At equal coordinates left endpoints are
/// processed first, since closed intervals touching at a point intersect.
pub fn maximal_cliques(model: &IntervalModel) -> Vec<Vec<usize>> {
    let mut events: Vec<(crate::rational::Rational, u8, usize)> = Vec::with_capacity(2 * model.len());
    for (v, iv) in model.intervals().iter().enumerate() {
        events.push((iv.left, 0, v));
        events.push((iv.right, 1, v));
    }
    events.sort();
    let mut active = BTreeSet::new();
    let mut cliques = Vec::new();
    let mut grew = false;
    for (_, kind, v) in events {
        if kind == 0 {
            active.insert(v);
            grew = true;
        } else {
            if grew {
                cliques.push(active.iter().copied().collect());
                grew = false;
            }
            active.remove(&v);
        }
    }
    cliques
}

/// `g` is not an interval graph. `witness` lists vertices of an obstruction
/// when one was isolated (a chordless cycle or a non-C1P vertex set).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotIntervalGraph {
    pub witness: Vec<usize>,
}

impl fmt::Display for NotIntervalGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not an interval graph (obstruction on vertices {:?})", self.witness)
    }
}

impl std::error::Error for NotIntervalGraph {}

/// Maximum cardinality search; the reverse of the visit order is a perfect
/// elimination ordering iff `g` is chordal.
fn mcs_order(g: &StaticGraph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unvisited vertex");
        done[v] = true;
        visit.push(v);
        for &u in g.neighbors(v) {
            if !done[u] {
                weight[u] += 1;
            }
        }
    }
    visit.reverse();
    visit
}

/// Maximal cliques of a chordal graph via a perfect elimination ordering,
/// or a chordless-cycle hint when `g` is not chordal.
fn chordal_cliques(g: &StaticGraph) -> Result<Vec<Vec<usize>>, NotIntervalGraph> {
    let peo = mcs_order(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<Vec<usize>> = Vec::new();
    for (i, &v) in peo.iter().enumerate() {
        let mut later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] > i).collect();
        if !g.is_clique(&later) {
            let (a, b) = first_non_edge(g, &later);
            return Err(NotIntervalGraph {
                witness: sorted(vec![v, a, b]),
            });
        }
        later.push(v);
        later.sort_unstable();
        candidates.push(later);
    }
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for c in &candidates {
        let is_sub = |d: &Vec<usize>| d.len() > c.len() && c.iter().all(|x| d.binary_search(x).is_ok());
        if !candidates.iter().any(is_sub) && !cliques.contains(c) {
            cliques.push(c.clone());
        }
    }
    Ok(cliques)
}

fn first_non_edge(g: &StaticGraph, set: &[usize]) -> (usize, usize) {
    for (i, &a) in set.iter().enumerate() {
        for &b in &set[i + 1..] {
            if !g.has_edge(a, b) {
                return (a, b);
            }
        }
    }
    unreachable!("set is not a clique")
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Maximal cliques of an abstract graph in a consecutive arrangement, or a
/// refusal when `g` is not an interval graph.
pub fn maximal_cliques_abstract(g: &StaticGraph) -> Result<Vec<Vec<usize>>, NotIntervalGraph> {
    let cliques = chordal_cliques(g)?;
    // Rows: vertices, columns: cliques containing them.
    let rows: Vec<Vec<usize>> = (0..g.n())
        .map(|v| (0..cliques.len()).filter(|&c| cliques[c].binary_search(&v).is_ok()).collect())
        .collect();
    match c1p_test(&BinaryMatrix::new(cliques.len(), rows)) {
        C1pResult::Ordering(order) => Ok(order.into_iter().map(|c| cliques[c].clone()).collect()),
        C1pResult::Witness(cols) => {
            let witness: BTreeSet<usize> = cols.iter().flat_map(|&c| cliques[c].iter().copied()).collect();
            Err(NotIntervalGraph {
                witness: witness.into_iter().collect(),
            })
        }
    }
}

/// One maximal clique, tagged with its 1-based layer of origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CliqueRow {
    pub layer: usize,
    pub vertices: Vec<usize>,
}

/// Rows are maximal cliques, columns are vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueMatrix {
    names: Vec<String>,
    rows: Vec<CliqueRow>,
}

impl CliqueMatrix {
    /// Rows with an already seen vertex set are dropped; the first layer tag wins.
    pub fn new(names: Vec<String>, rows: Vec<CliqueRow>) -> Self {
        let mut seen = BTreeSet::new();
        let rows = rows
            .into_iter()
            .map(|mut r| {
                r.vertices.sort_unstable();
                r.vertices.dedup();
                r
            })
            .filter(|r| seen.insert(r.vertices.clone()))
            .collect();
        CliqueMatrix { names, rows }
    }

    pub fn columns(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rows(&self) -> &[CliqueRow] {
        &self.rows
    }

    pub fn to_binary(&self) -> BinaryMatrix {
        BinaryMatrix::new(self.columns(), self.rows.iter().map(|r| r.vertices.clone()).collect())
    }

    pub fn c1p(&self) -> C1pResult {
        c1p_test(&self.to_binary())
    }
}

impl fmt::Display for CliqueMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.names.join(" "))?;
        for row in &self.rows {
            let mut bits = vec!['0'; self.columns()];
            for &v in &row.vertices {
                bits[v] = '1';
            }
            writeln!(f, "{}", bits.into_iter().collect::<String>())?;
        }
        Ok(())
    }
}
