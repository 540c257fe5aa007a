//! Maximum-weight independent set on interval models.

use crate::error::{Error, Result};
use crate::instance::IntervalModel;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MwisResult {
    /// Sorted vertex indices.
    pub set: Vec<usize>,
    pub weight: Rational,
}

/// Weighted interval scheduling over closed intervals. Optima are compared
/// by weight, then cardinality; on a full tie the later interval is left out.
pub fn mwis_interval(model: &IntervalModel, weights: &[Rational]) -> Result<MwisResult> {
    let n = model.len();
    if weights.len() != n {
        return Err(Error::VertexCountMismatch {
            left: n,
            right: weights.len(),
        });
    }
    if let Some(v) = weights.iter().position(Rational::is_negative) {
        return Err(Error::NegativeWeight(v));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| model.interval(a).right.cmp(&model.interval(b).right).then(a.cmp(&b)));
    let rights: Vec<Rational> = order.iter().map(|&v| model.interval(v).right).collect();
    // pred[j]: number of sorted intervals ending strictly before interval j starts.
    let pred: Vec<usize> = order
        .iter()
        .map(|&v| rights.partition_point(|&r| r < model.interval(v).left))
        .collect();
    let mut best: Vec<(Rational, usize)> = vec![(Rational::ZERO, 0); n + 1];
    let mut take = vec![false; n];
    for j in 0..n {
        let (w, c) = best[pred[j]];
        let with = (w + weights[order[j]], c + 1);
        take[j] = with > best[j];
        best[j + 1] = if take[j] { with } else { best[j] };
    }
    let mut set = Vec::new();
    let mut j = n;
    while j > 0 {
        if take[j - 1] {
            set.push(order[j - 1]);
            j = pred[j - 1];
        } else {
            j -= 1;
        }
    }
    set.sort_unstable();
    Ok(MwisResult { set, weight: best[n].0 })
}
