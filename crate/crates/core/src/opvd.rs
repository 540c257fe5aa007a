//! Vertex deletion sets to order preservation.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::instance::TemporalIntervalInstance;
use crate::interval::{CliqueMatrix, REOrdering};
use crate::order_preservation::{check_order_preserving, pooled_clique_matrix, OrderPreservationReport};

pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpvdResult {
    /// Sorted vertex indices of the deleted vertices.
    pub deletion_set: Vec<usize>,
    /// Surviving vertices (original indices) in a common ordering.
    pub ordering: Vec<usize>,
}

impl OpvdResult {
    pub fn size(&self) -> usize {
        self.deletion_set.len()
    }
}

fn require_unit(inst: &TemporalIntervalInstance) -> Result<()> {
    if inst.is_unit() {
        Ok(())
    } else {
        Err(Error::NotUnit)
    }
}

fn survivors(n: usize, deleted: &[usize]) -> Vec<usize> {
    (0..n).filter(|v| deleted.binary_search(v).is_err()).collect()
}

/// Recognition of `inst - deleted`, with the report mapped back to
/// original indices.
fn check_after(inst: &TemporalIntervalInstance, deleted: &[usize]) -> Result<OrderPreservationReport> {
    let keep = survivors(inst.n(), deleted);
    let mut rep = check_order_preserving(&inst.induce(&keep))?;
    rep.witness = rep.witness.iter().map(|&i| keep[i]).collect();
    Ok(rep)
}

fn finish(inst: &TemporalIntervalInstance, deletion_set: Vec<usize>) -> Result<OpvdResult> {
    let keep = survivors(inst.n(), &deletion_set);
    let rep = check_after(inst, &deletion_set)?;
    let ord = rep.ordering.ok_or(Error::NotOpvdSet)?;
    Ok(OpvdResult {
        ordering: ord.as_slice().iter().map(|&i| keep[i]).collect(),
        deletion_set,
    })
}

/// Minimum deletion set by iterative deepening. Each non-order-preserving
/// node yields a minimal witness, and every deletion set must hit it, so
/// branching on the witness is complete. Among minimum sets the
/// lexicographically smallest is returned.
pub fn min_opvd(inst: &TemporalIntervalInstance, budget: Option<usize>) -> Result<OpvdResult> {
    let all: Vec<usize> = (0..inst.n()).collect();
    min_opvd_restricted(inst, &all, budget)
}

/// As [`min_opvd`], deleting only vertices from `candidates`.
pub fn min_opvd_restricted(
    inst: &TemporalIntervalInstance,
    candidates: &[usize],
    budget: Option<usize>,
) -> Result<OpvdResult> {
    require_unit(inst)?;
    let mut allowed = vec![false; inst.n()];
    for &c in candidates {
        if c >= inst.n() {
            return Err(Error::UnknownVertex(format!("#{c}")));
        }
        allowed[c] = true;
    }
    let cap = budget.unwrap_or(usize::MAX).min(candidates.len());
    for depth in 0..=cap {
        let mut found: Vec<Vec<usize>> = Vec::new();
        let mut seen = HashSet::new();
        search(inst, &allowed, Vec::new(), depth, &mut seen, &mut found)?;
        if let Some(best) = found.into_iter().min() {
            return finish(inst, best);
        }
    }
    Err(Error::ExceedsBudget(budget.unwrap_or(cap)))
}

fn search(
    inst: &TemporalIntervalInstance,
    allowed: &[bool],
    deleted: Vec<usize>,
    depth: usize,
    seen: &mut HashSet<Vec<usize>>,
    found: &mut Vec<Vec<usize>>,
) -> Result<()> {
    if !seen.insert(deleted.clone()) {
        return Ok(());
    }
    let rep = check_after(inst, &deleted)?;
    if rep.is_order_preserving {
        found.push(deleted);
        return Ok(());
    }
    if deleted.len() == depth {
        return Ok(());
    }
    for w in rep.witness.into_iter().filter(|&w| allowed[w]) {
        let mut next = deleted.clone();
        let at = next.binary_search(&w).unwrap_err();
        next.insert(at, w);
        search(inst, allowed, next, depth, seen, found)?;
    }
    Ok(())
}

/// Exact minimum by trying vertex subsets in increasing size (each size in
/// lexicographic order).
pub fn opvd_exhaustive(inst: &TemporalIntervalInstance) -> Result<OpvdResult> {
    opvd_exhaustive_with(inst, DEFAULT_EXHAUSTIVE_LIMIT, None)
}

/// Exhaustive search with an explicit size limit, optionally deleting only
/// from `candidates`.
pub fn opvd_exhaustive_with(
    inst: &TemporalIntervalInstance,
    limit: usize,
    candidates: Option<&[usize]>,
) -> Result<OpvdResult> {
    if inst.n() > limit {
        return Err(Error::LimitExceeded { n: inst.n(), limit });
    }
    require_unit(inst)?;
    let pool: Vec<usize> = match candidates {
        Some(c) => {
            let mut c = c.to_vec();
            c.sort_unstable();
            c.dedup();
            c
        }
        None => (0..inst.n()).collect(),
    };
    for size in 0..=pool.len() {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let set: Vec<usize> = idx.iter().map(|&i| pool[i]).collect();
            if check_after(inst, &set)?.is_order_preserving {
                return finish(inst, set);
            }
            if !next_combination(&mut idx, pool.len()) {
                break;
            }
        }
    }
    Err(Error::NotOrderPreserving)
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The pooled clique matrix with its column-to-vertex map. Column `c` is
/// vertex `column_to_vertex[c]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnDeletionReduction {
    pub matrix: CliqueMatrix,
    pub column_to_vertex: Vec<usize>,
}

impl ColumnDeletionReduction {
    /// The matrix after deleting `columns`, with rows re-extracted as the
    /// maximal cliques of the reduced layers.
    pub fn delete_columns(&self, inst: &TemporalIntervalInstance, columns: &[usize]) -> Result<CliqueMatrix> {
        let mut vertices: Vec<usize> = columns.iter().map(|&c| self.column_to_vertex[c]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        pooled_clique_matrix(&inst.remove_vertices(&vertices)?)
    }

    /// Whether deleting `columns` leaves a matrix with the consecutive ones
    /// property.
    pub fn is_c1p_after(&self, inst: &TemporalIntervalInstance, columns: &[usize]) -> Result<bool> {
        Ok(self.delete_columns(inst, columns)?.c1p().is_c1p())
    }
}

pub fn reduce_to_column_deletion(inst: &TemporalIntervalInstance) -> Result<ColumnDeletionReduction> {
    require_unit(inst)?;
    Ok(ColumnDeletionReduction {
        matrix: pooled_clique_matrix(inst)?,
        column_to_vertex: (0..inst.n()).collect(),
    })
}

/// Checks that `set` is a deletion set and returns the surviving ordering.
pub fn verify_opvd_set(inst: &TemporalIntervalInstance, set: &[usize]) -> Result<REOrdering> {
    require_unit(inst)?;
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    check_after(inst, &set)?.ordering.ok_or(Error::NotOpvdSet)
}
