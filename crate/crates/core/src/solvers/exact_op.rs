use crate::error::Result;
use crate::instance::TemporalIntervalInstance;
use crate::interval::{mwis_interval, REOrdering};
use crate::order_preservation::conflict_interval_model;

use super::{Algorithm, Solution};

/// Optimal solution for an instance whose layers all agree with `ord`: a
/// maximum-weight independent set of the conflict graph's interval model.
pub fn solve_exact_op(inst: &TemporalIntervalInstance, ord: &REOrdering) -> Result<Solution> {
    let model = conflict_interval_model(inst, ord)?;
    let res = mwis_interval(&model, &inst.weights())?;
    Ok(Solution::new(inst, Algorithm::Op, res.set))
}
