//! Benchmark harness: every solver on every instance of a directory.

use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

use crate::conflict::neighborhood_bound;
use crate::error::{Error, Result};
use crate::format::parse_instance;
use crate::instance::TemporalIntervalInstance;
use crate::opvd::min_opvd;
use crate::order_preservation::recognize_order_preserving;
use crate::rational::Rational;
use crate::solvers::{
    solve_exact_bruteforce_with_limit, solve_exact_op, solve_fpt, solve_greedy, verify_solution, Algorithm, Solution,
    DEFAULT_BRUTEFORCE_LIMIT,
};

pub const CSV_HEADER: [&str; 13] = [
    "instance",
    "n",
    "tau",
    "delta",
    "k",
    "algorithm",
    "objective",
    "cardinality",
    "runtime_ms",
    "verified",
    "oracle_objective",
    "ratio_bound",
    "bound_holds",
];

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub oracle_limit: usize,
    /// Leave `runtime_ms` as `NA` so reports are byte-reproducible.
    pub omit_timing: bool,
    /// Worker threads; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            oracle_limit: DEFAULT_BRUTEFORCE_LIMIT,
            omit_timing: false,
            threads: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub instance: String,
    pub shape: Option<(usize, usize, usize, usize)>,
    pub algorithm: Algorithm,
    /// `PASS`, `FAIL`, `SKIP` or `ERROR`.
    pub verified: &'static str,
    pub objective: Option<Rational>,
    pub cardinality: Option<usize>,
    pub runtime_ms: Option<f64>,
    pub oracle_objective: Option<Rational>,
    pub ratio_bound: Option<u64>,
    pub bound_holds: Option<bool>,
}

impl BenchRow {
    fn record(&self) -> Vec<String> {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map_or_else(|| "NA".to_string(), T::to_string)
        }
        let (n, tau, delta, k) = match self.shape {
            Some((n, t, d, k)) => (n.to_string(), t.to_string(), d.to_string(), k.to_string()),
            None => ("NA".into(), "NA".into(), "NA".into(), "NA".into()),
        };
        vec![
            self.instance.clone(),
            n,
            tau,
            delta,
            k,
            self.algorithm.to_string(),
            opt(&self.objective),
            opt(&self.cardinality),
            self.runtime_ms.map_or_else(|| "NA".to_string(), |ms| format!("{ms:.3}")),
            self.verified.to_string(),
            opt(&self.oracle_objective),
            opt(&self.ratio_bound),
            opt(&self.bound_holds),
        ]
    }
}

/// Instance files (`*.tis`) directly inside `dir`, sorted by name.
pub fn instance_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let entries = std::fs::read_dir(dir).map_err(|e| Error::InvalidParameter(format!("{}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "tis"))
        .collect();
    files.sort();
    Ok(files)
}

/// Runs all solvers on every instance file in `dir`. Rows are sorted by
/// instance name, then algorithm.
pub fn run_bench(dir: &Path, opts: &BenchOptions) -> Result<Vec<BenchRow>> {
    let files = instance_files(dir)?;
    let work = || -> Vec<BenchRow> { files.par_iter().flat_map_iter(|f| bench_file(f, opts)).collect() };
    let mut rows = match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(work),
        None => work(),
    };
    rows.sort_by(|a, b| a.instance.cmp(&b.instance).then(a.algorithm.cmp(&b.algorithm)));
    Ok(rows)
}

fn bench_file(path: &Path, opts: &BenchOptions) -> Vec<BenchRow> {
    let name = path.file_name().map_or_else(String::new, |n| n.to_string_lossy().into_owned());
    let parsed = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(e.to_string()))
        .and_then(|text| parse_instance(&text));
    match parsed {
        Ok(inst) => bench_instance(&name, &inst, opts),
        Err(_) => Algorithm::ALL
            .iter()
            .map(|&algorithm| BenchRow {
                instance: name.clone(),
                shape: None,
                algorithm,
                verified: "ERROR",
                objective: None,
                cardinality: None,
                runtime_ms: None,
                oracle_objective: None,
                ratio_bound: None,
                bound_holds: None,
            })
            .collect(),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1000.0)
}

/// Rows for one parsed instance, one per algorithm.
pub fn bench_instance(name: &str, inst: &TemporalIntervalInstance, opts: &BenchOptions) -> Vec<BenchRow> {
    let shape = Some((inst.n(), inst.tau(), inst.delta(), inst.k()));
    let run = |alg: Algorithm| -> (Option<Solution>, f64) {
        let (res, ms) = timed(|| -> Option<Solution> {
            match alg {
                Algorithm::Exact => solve_exact_bruteforce_with_limit(inst, opts.oracle_limit).ok(),
                Algorithm::Greedy => Some(solve_greedy(inst)),
                Algorithm::Op => {
                    let ord = recognize_order_preserving(inst).ok()?.ordering?;
                    solve_exact_op(inst, &ord).ok()
                }
                Algorithm::Fpt => {
                    let s = min_opvd(inst, None).ok()?;
                    solve_fpt(inst, &s.deletion_set).ok()
                }
            }
        });
        (res, ms)
    };
    let results: Vec<(Algorithm, Option<Solution>, f64)> = Algorithm::ALL
        .iter()
        .map(|&a| {
            let (s, ms) = run(a);
            (a, s, ms)
        })
        .collect();
    let oracle = results[0].1.as_ref().map(|s| s.weight);
    results
        .into_iter()
        .map(|(algorithm, sol, ms)| {
            let Some(sol) = sol else {
                return BenchRow {
                    instance: name.to_string(),
                    shape,
                    algorithm,
                    verified: "SKIP",
                    objective: None,
                    cardinality: None,
                    runtime_ms: None,
                    oracle_objective: oracle,
                    ratio_bound: None,
                    bound_holds: None,
                };
            };
            let ok = verify_solution(inst, &sol.set).map(|r| r.independent).unwrap_or(false);
            let ratio_bound = match algorithm {
                Algorithm::Greedy => neighborhood_bound(inst),
                _ => 1,
            };
            let guaranteed = algorithm != Algorithm::Greedy || inst.is_unit();
            let bound_holds = oracle
                .filter(|_| guaranteed)
                .map(|opt| sol.weight * Rational::from(ratio_bound as usize) >= opt);
            BenchRow {
                instance: name.to_string(),
                shape,
                algorithm,
                verified: if ok { "PASS" } else { "FAIL" },
                objective: Some(sol.weight),
                cardinality: Some(sol.cardinality()),
                runtime_ms: (!opts.omit_timing).then_some(ms),
                oracle_objective: oracle,
                ratio_bound: Some(ratio_bound),
                bound_holds,
            }
        })
        .collect()
}

pub fn rows_to_csv(rows: &[BenchRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for row in rows {
        w.write_record(row.record()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}
