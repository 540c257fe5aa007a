//! Solvers for the temporal Δ independent set problem.

pub mod bruteforce;
mod exact_op;
mod fpt;
mod greedy;
mod verify;

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::instance::TemporalIntervalInstance;
use crate::rational::Rational;

pub use bruteforce::{solve_exact_bruteforce, solve_exact_bruteforce_with_limit, DEFAULT_BRUTEFORCE_LIMIT};
pub use exact_op::solve_exact_op;
pub use fpt::solve_fpt;
pub use greedy::{solve_greedy, solve_greedy_traced, GreedyStep};
pub use verify::{verify_solution, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Exact,
    Greedy,
    Op,
    Fpt,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::Exact, Algorithm::Greedy, Algorithm::Op, Algorithm::Fpt];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Exact => "exact",
            Algorithm::Greedy => "greedy",
            Algorithm::Op => "op",
            Algorithm::Fpt => "fpt",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown algorithm `{s}`")))
    }
}

/// A Δ-independent set found by one of the solvers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub algorithm: Algorithm,
    /// Sorted vertex indices.
    pub set: Vec<usize>,
    pub weight: Rational,
}

impl Solution {
    pub(crate) fn new(inst: &TemporalIntervalInstance, algorithm: Algorithm, mut set: Vec<usize>) -> Self {
        set.sort_unstable();
        let weight = inst.total_weight(&set);
        Solution { algorithm, set, weight }
    }

    pub fn cardinality(&self) -> usize {
        self.set.len()
    }

    /// Decision answer: at least `k` vertices.
    pub fn meets_k(&self, inst: &TemporalIntervalInstance) -> bool {
        self.set.len() >= inst.k()
    }
}
