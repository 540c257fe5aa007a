//! Consecutive-ones testing by partition refinement over overlap
//! components, with inclusion-minimal column witnesses.

use std::collections::{BTreeSet, VecDeque};

/// A sparse 0/1 matrix: each row lists the columns holding a one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryMatrix {
    columns: usize,
    rows: Vec<Vec<usize>>,
}

impl BinaryMatrix {
    /// Panics if a row names a column `>= columns`.
    pub fn new(columns: usize, rows: Vec<Vec<usize>>) -> Self {
        let rows = rows
            .into_iter()
            .map(|mut r| {
                r.sort_unstable();
                r.dedup();
                assert!(r.last().map_or(true, |&c| c < columns), "column out of range");
                r
            })
            .collect();
        BinaryMatrix { columns, rows }
    }

    pub fn from_dense(dense: &[Vec<bool>]) -> Self {
        let columns = dense.first().map_or(0, Vec::len);
        let rows = dense
            .iter()
            .map(|row| row.iter().enumerate().filter(|(_, &b)| b).map(|(c, _)| c).collect())
            .collect();
        BinaryMatrix::new(columns, rows)
    }

    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// True iff every row's ones are contiguous when columns are laid out in
    /// `order`. Columns missing from `order` are ignored.
    pub fn is_consecutive_under(&self, order: &[usize]) -> bool {
        rows_consecutive_under(&self.rows, self.columns, order)
    }
}

fn rows_consecutive_under(rows: &[Vec<usize>], columns: usize, order: &[usize]) -> bool {
    let mut pos = vec![usize::MAX; columns];
    for (i, &c) in order.iter().enumerate() {
        pos[c] = i;
    }
    rows.iter().all(|row| {
        let ps: Vec<usize> = row.iter().map(|&c| pos[c]).filter(|&p| p != usize::MAX).collect();
        match (ps.iter().min(), ps.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo + 1 == ps.len(),
            _ => true,
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum C1pResult {
    /// A column permutation making every row consecutive.
    Ordering(Vec<usize>),
    /// An inclusion-minimal column set whose submatrix has no such
    /// permutation.
    Witness(Vec<usize>),
}

impl C1pResult {
    pub fn ordering(&self) -> Option<&[usize]> {
        match self {
            C1pResult::Ordering(o) => Some(o),
            C1pResult::Witness(_) => None,
        }
    }

    pub fn is_c1p(&self) -> bool {
        matches!(self, C1pResult::Ordering(_))
    }
}

/// Tests the consecutive ones property over all columns of `m`.
pub fn c1p_test(m: &BinaryMatrix) -> C1pResult {
    let all: Vec<usize> = (0..m.columns).collect();
    match consecutive_ordering(m.columns, &m.rows, &all) {
        Some(order) => {
            assert!(m.is_consecutive_under(&order), "consecutive arrangement failed self-check");
            C1pResult::Ordering(order)
        }
        None => C1pResult::Witness(minimize_witness(m, all)),
    }
}

/// Greedy column dropping. Non-C1P is preserved by adding columns, so one
/// pass yields an inclusion-minimal set.
fn minimize_witness(m: &BinaryMatrix, mut witness: Vec<usize>) -> Vec<usize> {
    let mut i = 0;
    while i < witness.len() {
        let mut trial = witness.clone();
        trial.remove(i);
        if consecutive_ordering(m.columns, &m.rows, &trial).is_none() {
            witness = trial;
        } else {
            i += 1;
        }
    }
    witness
}

/// Arranges `active` columns so every row (restricted to `active`) is
/// consecutive, or returns `None` if impossible.
pub(crate) fn consecutive_ordering(columns: usize, rows: &[Vec<usize>], active: &[usize]) -> Option<Vec<usize>> {
    let mut is_active = vec![false; columns];
    for &c in active {
        is_active[c] = true;
    }
    let restricted: BTreeSet<Vec<usize>> = rows
        .iter()
        .map(|r| r.iter().copied().filter(|&c| is_active[c]).collect::<Vec<_>>())
        .filter(|r| !r.is_empty())
        .collect();
    let rows: Vec<Vec<usize>> = restricted.into_iter().collect();

    let components = overlap_components(&rows);
    let mut parts: Vec<Component> = Vec::with_capacity(components.len());
    for comp in components {
        let atoms = refine(&rows, &comp, columns)?;
        let union: BTreeSet<usize> = atoms.iter().flatten().copied().collect();
        parts.push(Component { atoms, union });
    }
    // Outer components first; a single-row component precedes a multi-atom
    // component with the same union.
    parts.sort_by(|a, b| {
        b.union
            .len()
            .cmp(&a.union.len())
            .then(a.atoms.len().cmp(&b.atoms.len()))
            .then(a.union.cmp(&b.union))
    });

    // Unions of distinct components are laminar; a nested component lies
    // inside a single atom of its parent.
    let mut children: Vec<Vec<Vec<usize>>> = parts.iter().map(|p| vec![Vec::new(); p.atoms.len()]).collect();
    let mut roots = Vec::new();
    for b in 0..parts.len() {
        let parent = (0..b)
            .filter(|&a| parts[b].union.is_subset(&parts[a].union))
            .min_by(|&x, &y| parts[x].union.len().cmp(&parts[y].union.len()).then(y.cmp(&x)));
        match parent {
            None => roots.push(b),
            Some(a) => {
                let first = *parts[b].union.iter().next().expect("nonempty union");
                let atom = parts[a]
                    .atoms
                    .iter()
                    .position(|at| at.contains(&first))
                    .expect("nested union lies in an atom");
                if !parts[b].union.iter().all(|c| parts[a].atoms[atom].contains(c)) {
                    return None;
                }
                children[a][atom].push(b);
            }
        }
    }

    let mut order = Vec::with_capacity(active.len());
    for &r in &roots {
        layout(r, &parts, &children, &mut order);
    }
    let mut placed = vec![false; columns];
    for &c in &order {
        placed[c] = true;
    }
    let mut rest: Vec<usize> = active.iter().copied().filter(|&c| !placed[c]).collect();
    rest.sort_unstable();
    order.extend(rest);
    Some(order)
}

struct Component {
    atoms: Vec<Vec<usize>>,
    union: BTreeSet<usize>,
}

fn layout(idx: usize, parts: &[Component], children: &[Vec<Vec<usize>>], out: &mut Vec<usize>) {
    for (a, atom) in parts[idx].atoms.iter().enumerate() {
        let start = out.len();
        for &child in &children[idx][a] {
            layout(child, parts, children, out);
        }
        let inner: BTreeSet<usize> = out[start..].iter().copied().collect();
        let mut rest: Vec<usize> = atom.iter().copied().filter(|c| !inner.contains(c)).collect();
        rest.sort_unstable();
        out.extend(rest);
    }
}

fn overlaps(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    common > 0 && common < a.len() && common < b.len()
}

/// Connected components of the row overlap graph, each listed in BFS order.
fn overlap_components(rows: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let m = rows.len();
    let adj: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).filter(|&j| j != i && overlaps(&rows[i], &rows[j])).collect())
        .collect();
    let mut seen = vec![false; m];
    let mut out = Vec::new();
    for s in 0..m {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

/// Ordered partition (atoms) of one overlap component's union. Each row
/// after the first overlaps an earlier one, so the arrangement is forced up
/// to reversal.
fn refine(rows: &[Vec<usize>], comp: &[usize], columns: usize) -> Option<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = vec![rows[comp[0]].clone()];
    let mut covered = vec![false; columns];
    for &c in &rows[comp[0]] {
        covered[c] = true;
    }
    let mut in_row = vec![false; columns];
    for &ri in &comp[1..] {
        let row = &rows[ri];
        for &c in row {
            in_row[c] = true;
        }
        let fresh: Vec<usize> = row.iter().copied().filter(|&c| !covered[c]).collect();
        let counts: Vec<usize> = classes
            .iter()
            .map(|cl| cl.iter().filter(|&&c| in_row[c]).count())
            .collect();
        let result = place_row(&mut classes, &counts, &in_row, fresh.clone());
        for &c in row {
            in_row[c] = false;
        }
        result?;
        for c in fresh {
            covered[c] = true;
        }
    }
    Some(classes)
}

fn place_row(classes: &mut Vec<Vec<usize>>, counts: &[usize], in_row: &[bool], fresh: Vec<usize>) -> Option<()> {
    let touched: Vec<usize> = (0..classes.len()).filter(|&k| counts[k] > 0).collect();
    let (&lo, &hi) = (touched.first()?, touched.last()?);
    let full = |k: usize| counts[k] == classes[k].len();
    if (lo + 1..hi).any(|k| !full(k)) {
        return None;
    }
    let last = classes.len() - 1;
    // Splits class k into (outside, inside) or (inside, outside).
    let split = |classes: &mut Vec<Vec<usize>>, k: usize, inside_first: bool| {
        let (inside, outside): (Vec<usize>, Vec<usize>) = classes[k].iter().partition(|&&c| in_row[c]);
        if outside.is_empty() {
            return;
        }
        let (a, b) = if inside_first { (inside, outside) } else { (outside, inside) };
        classes[k] = a;
        classes.insert(k + 1, b);
    };

    if fresh.is_empty() {
        if lo == hi {
            return full(lo).then_some(());
        }
        split(classes, hi, true);
        split(classes, lo, false);
        return Some(());
    }
    let right_ok = hi == last && (full(hi) || lo == hi);
    let left_ok = lo == 0 && (full(lo) || lo == hi);
    if right_ok {
        split(classes, lo, false);
        classes.push(fresh);
        Some(())
    } else if left_ok {
        split(classes, hi, true);
        classes.insert(0, fresh);
        Some(())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(cols: usize, rows: &[&[usize]]) -> BinaryMatrix {
        BinaryMatrix::new(cols, rows.iter().map(|r| r.to_vec()).collect())
    }

    #[test]
    fn identity_matrix_is_c1p() {
        let id = m(4, &[&[0], &[1], &[2], &[3]]);
        let order = c1p_test(&id).ordering().unwrap().to_vec();
        assert!(id.is_consecutive_under(&order));
        assert_eq!(order.len(), 4);
    }

    #[test]
    fn chain_is_c1p() {
        let mat = m(3, &[&[0, 1], &[1, 2]]);
        let order = c1p_test(&mat).ordering().unwrap().to_vec();
        assert!(mat.is_consecutive_under(&order));
        assert!(mat.is_consecutive_under(&[0, 1, 2]));
    }

    #[test]
    fn triangle_rows_are_not_c1p() {
        let mat = m(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(c1p_test(&mat), C1pResult::Witness(vec![0, 1, 2]));
    }

    #[test]
    fn witness_is_minimal() {
        // Triangle on columns 1,3,4 plus unrelated columns.
        let mat = m(6, &[&[1, 3], &[3, 4], &[1, 4], &[0, 2], &[2, 5]]);
        let C1pResult::Witness(w) = c1p_test(&mat) else { panic!("expected witness") };
        assert_eq!(w, vec![1, 3, 4]);
    }

    #[test]
    fn nested_components() {
        // Outer chain {0..5},{4..8}; inner chain inside atom {0..3}.
        let mat = m(9, &[&[0, 1, 2, 3, 4, 5], &[4, 5, 6, 7, 8], &[0, 1], &[1, 2], &[7]]);
        let order = c1p_test(&mat).ordering().unwrap().to_vec();
        assert!(mat.is_consecutive_under(&order));
    }

    #[test]
    fn empty_matrix() {
        assert_eq!(c1p_test(&m(0, &[])), C1pResult::Ordering(vec![]));
        assert!(c1p_test(&m(3, &[])).is_c1p());
    }
}
