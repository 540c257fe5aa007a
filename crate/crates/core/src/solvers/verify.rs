use crate::conflict::{delta_independence_check, Violation};
use crate::error::Result;
use crate::instance::TemporalIntervalInstance;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub independent: bool,
    pub violation: Option<Violation>,
    pub cardinality: usize,
    pub k: usize,
    pub meets_k: bool,
    pub weight: Rational,
}

impl VerificationReport {
    /// Independent and of size at least `k`.
    pub fn accepted(&self) -> bool {
        self.independent && self.meets_k
    }
}

/// Checks a vertex set directly against the layers, window by window.
pub fn verify_solution(inst: &TemporalIntervalInstance, set: &[usize]) -> Result<VerificationReport> {
    let mut set = set.to_vec();
    set.sort_unstable();
    set.dedup();
    let report = delta_independence_check(inst, &set)?;
    Ok(VerificationReport {
        independent: report.independent,
        violation: report.violation,
        cardinality: set.len(),
        k: inst.k(),
        meets_k: set.len() >= inst.k(),
        weight: inst.total_weight(&set),
    })
}
