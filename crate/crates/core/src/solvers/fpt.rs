use crate::conflict::conflict_graph;
use crate::error::{Error, Result};
use crate::instance::TemporalIntervalInstance;
use crate::interval::mwis_interval;
use crate::order_preservation::{conflict_interval_model, recognize_order_preserving};
use crate::rational::Rational;

use super::{verify_solution, Algorithm, Solution};

/// Optimal solution given a deletion set `s` making the instance order
/// preserving. For every independent `X ⊆ s`, the order-preserving part
/// minus the conflict neighbors of `X` is solved exactly; the best
/// `X ∪ V'` wins.
pub fn solve_fpt(inst: &TemporalIntervalInstance, s: &[usize]) -> Result<Solution> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&v) = s.iter().find(|&&v| v >= inst.n()) {
        return Err(Error::UnknownVertex(format!("#{v}")));
    }
    if s.len() > 30 {
        return Err(Error::LimitExceeded { n: s.len(), limit: 30 });
    }
    let keep: Vec<usize> = (0..inst.n()).filter(|v| s.binary_search(v).is_err()).collect();
    let rest = inst.induce(&keep);
    let ord = recognize_order_preserving(&rest)?.ordering.ok_or(Error::NotOpvdSet)?;
    let model = conflict_interval_model(&rest, &ord)?;
    let g = conflict_graph(inst);
    let weights = inst.weights();

    let mut best: Option<((Rational, usize), Vec<usize>)> = None;
    for mask in 0u64..1 << s.len() {
        let x: Vec<usize> = (0..s.len()).filter(|&i| mask >> i & 1 == 1).map(|i| s[i]).collect();
        if !g.is_independent(&x) {
            continue;
        }
        let local: Vec<usize> = (0..keep.len())
            .filter(|&i| x.iter().all(|&u| !g.has_edge(u, keep[i])))
            .collect();
        let sub = model.restrict(&local);
        let sub_weights: Vec<Rational> = local.iter().map(|&i| weights[keep[i]]).collect();
        let res = mwis_interval(&sub, &sub_weights)?;
        let mut cand = x;
        cand.extend(res.set.iter().map(|&j| keep[local[j]]));
        let key = (inst.total_weight(&cand), cand.len());
        if best.as_ref().map_or(true, |(k, _)| key > *k) {
            best = Some((key, cand));
        }
    }
    let (_, set) = best.expect("the empty subset is always independent");
    let sol = Solution::new(inst, Algorithm::Fpt, set);
    assert!(verify_solution(inst, &sol.set)?.independent, "fpt produced a dependent set");
    Ok(sol)
}
