//! The `tis` command line, as a library function returning exit code and
//! output so it can be driven from tests.

use std::ffi::OsString;
use std::fmt::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{rows_to_csv, run_bench, BenchOptions};
use crate::conflict::{conflict_graph, WindowSemantics};
use crate::error::Error;
use crate::format::{parse_instance, serialize_instance, sorted_named_edges};
use crate::generators::{gen_lcsp_gadget, gen_order_preserving_weighted, gen_random_unit_weighted};
use crate::instance::TemporalIntervalInstance;
use crate::opvd::{min_opvd, opvd_exhaustive_with, DEFAULT_EXHAUSTIVE_LIMIT};
use crate::order_preservation::recognize_order_preserving;
use crate::rational::Rational;
use crate::solvers::{
    solve_exact_bruteforce_with_limit, solve_exact_op, solve_fpt, solve_greedy, verify_solution, Solution,
    DEFAULT_BRUTEFORCE_LIMIT,
};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "tis", version, about = "Temporal Δ independent sets on temporal interval graphs")]
struct Cli {
    /// How windows of consecutive layers are formed.
    #[arg(long, global = true, value_enum, default_value_t = SemanticsArg::Figure)]
    window_semantics: SemanticsArg,
    /// Seed for generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Size cap for the exhaustive oracles.
    #[arg(long, global = true)]
    limit_oracle: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SemanticsArg {
    Figure,
    Formula,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate an instance file.
    Validate { file: PathBuf },
    /// Print the conflict graph.
    Conflict {
        file: PathBuf,
        #[arg(long = "out", value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
    /// Solve the instance and self-verify the result.
    Solve(SolveArgs),
    /// Compute a minimum order preserving vertex deletion set.
    Opvd {
        file: PathBuf,
        /// Use exhaustive subset enumeration instead of branching.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Decide whether all layers agree on a common ordering.
    Recognize { file: PathBuf },
    /// Generate an instance.
    Gen(GenArgs),
    /// Run every solver on every `*.tis` file of a directory.
    Bench {
        dir: PathBuf,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Leave runtimes out so the report is reproducible.
        #[arg(long)]
        omit_timing: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Dot,
}

#[derive(Args, Debug)]
struct SolveArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    alg: AlgArg,
    /// Deletion set for `fpt`, as comma separated names.
    #[arg(long, value_delimiter = ',', conflicts_with = "opvd")]
    opvd_set: Option<Vec<String>>,
    /// `auto`: compute the deletion set for `fpt`.
    #[arg(long, value_parser = ["auto"])]
    opvd: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum AlgArg {
    Exact,
    Greedy,
    Op,
    Fpt,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Random,
    Op,
    Lcsp,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    #[arg(long, default_value_t = 6)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    tau: usize,
    #[arg(long, default_value_t = 1)]
    delta: usize,
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Width of the left endpoint grid (`random`).
    #[arg(long, default_value = "2")]
    spread: Rational,
    /// Random integer weights in `1..=max`.
    #[arg(long)]
    max_weight: Option<u32>,
    /// Permutations for `lcsp`, comma separated.
    #[arg(long, value_delimiter = ',')]
    perms: Vec<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::LimitExceeded { .. } => EXIT_LIMIT,
            Error::ExceedsBudget(_) => EXIT_NO,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<(i32, String), Failure>;

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_YES };
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CliOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok((code, stdout)) => CliOutput {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(f) => CliOutput {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn load(cli: &Cli, file: &PathBuf) -> Result<TemporalIntervalInstance, Failure> {
    let text = std::fs::read_to_string(file).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", file.display()),
    })?;
    let semantics = match cli.window_semantics {
        SemanticsArg::Figure => WindowSemantics::Figure,
        SemanticsArg::Formula => WindowSemantics::Formula,
    };
    Ok(parse_instance(&text)?.with_semantics(semantics))
}

fn names(inst: &TemporalIntervalInstance, set: &[usize]) -> String {
    if set.is_empty() {
        "-".to_string()
    } else {
        inst.names(set).join(",")
    }
}

fn execute(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Validate { file } => {
            let inst = load(cli, file)?;
            Ok((
                EXIT_YES,
                format!(
                    "VALID mode={} n={} tau={} delta={} k={} unit={}\n",
                    inst.mode().as_str(),
                    inst.n(),
                    inst.tau(),
                    inst.delta(),
                    inst.k(),
                    inst.is_unit()
                ),
            ))
        }
        Command::Conflict { file, format } => {
            let inst = load(cli, file)?;
            let g = conflict_graph(&inst);
            let edges = sorted_named_edges(&inst, &g);
            let mut out = String::new();
            match format {
                GraphFormat::Edgelist => {
                    for (a, b) in edges {
                        let _ = writeln!(out, "{a} {b}");
                    }
                }
                GraphFormat::Dot => {
                    out.push_str("graph conflict {\n");
                    for v in inst.vertices() {
                        let _ = writeln!(out, "  \"{}\";", v.name);
                    }
                    for (a, b) in edges {
                        let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
                    }
                    out.push_str("}\n");
                }
            }
            Ok((EXIT_YES, out))
        }
        Command::Solve(args) => solve(cli, args),
        Command::Opvd { file, exact, budget } => {
            let inst = load(cli, file)?;
            let res = if *exact {
                opvd_exhaustive_with(&inst, cli.limit_oracle.unwrap_or(DEFAULT_EXHAUSTIVE_LIMIT), None)?
            } else {
                min_opvd(&inst, *budget)?
            };
            if budget.is_some_and(|b| res.size() > b) {
                return Err(Error::ExceedsBudget(budget.unwrap_or(0)).into());
            }
            Ok((
                EXIT_YES,
                format!(
                    "size {}\nset {}\nordering {}\n",
                    res.size(),
                    names(&inst, &res.deletion_set),
                    names(&inst, &res.ordering)
                ),
            ))
        }
        Command::Recognize { file } => {
            let inst = load(cli, file)?;
            let rep = recognize_order_preserving(&inst)?;
            match rep.ordering {
                Some(ord) => Ok((EXIT_YES, format!("ORDER-PRESERVING {}\n", names(&inst, ord.as_slice())))),
                None => Ok((EXIT_NO, format!("NOT-ORDER-PRESERVING witness={}\n", names(&inst, &rep.witness)))),
            }
        }
        Command::Gen(args) => generate(cli, args),
        Command::Bench {
            dir,
            csv,
            omit_timing,
            threads,
        } => {
            let opts = BenchOptions {
                oracle_limit: cli.limit_oracle.unwrap_or(DEFAULT_BRUTEFORCE_LIMIT),
                omit_timing: *omit_timing,
                threads: *threads,
            };
            let text = rows_to_csv(&run_bench(dir, &opts)?);
            match csv {
                Some(path) => {
                    write_file(path, &text)?;
                    Ok((EXIT_YES, String::new()))
                }
                None => Ok((EXIT_YES, text)),
            }
        }
    }
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })
}

fn solve(cli: &Cli, args: &SolveArgs) -> CmdResult {
    let inst = load(cli, &args.file)?;
    let sol: Solution = match args.alg {
        AlgArg::Exact => solve_exact_bruteforce_with_limit(&inst, cli.limit_oracle.unwrap_or(DEFAULT_BRUTEFORCE_LIMIT))?,
        AlgArg::Greedy => solve_greedy(&inst),
        AlgArg::Op => {
            let ord = recognize_order_preserving(&inst)?
                .ordering
                .ok_or(Error::NotOrderPreserving)?;
            solve_exact_op(&inst, &ord)?
        }
        AlgArg::Fpt => {
            let s = match &args.opvd_set {
                Some(list) => inst.resolve(list)?,
                None => min_opvd(&inst, None)?.deletion_set,
            };
            solve_fpt(&inst, &s)?
        }
    };
    let report = verify_solution(&inst, &sol.set)?;
    let out = format!(
        "algorithm {}\nobjective {}\ncardinality {}\nset {}\nverify {}\ndecision {}\n",
        sol.algorithm,
        sol.weight,
        sol.cardinality(),
        names(&inst, &sol.set),
        if report.independent { "PASS" } else { "FAIL" },
        if report.meets_k { "YES" } else { "NO" },
    );
    Ok((if report.meets_k { EXIT_YES } else { EXIT_NO }, out))
}

fn generate(cli: &Cli, args: &GenArgs) -> CmdResult {
    let inst = match args.kind {
        GenKind::Random => gen_random_unit_weighted(
            args.n,
            args.tau,
            args.delta,
            args.k,
            cli.seed,
            args.spread,
            args.max_weight,
        )?,
        GenKind::Op => gen_order_preserving_weighted(args.n, args.tau, args.delta, args.k, cli.seed, args.max_weight)?,
        GenKind::Lcsp => gen_lcsp_gadget(&args.perms)?.with_k(args.k),
    };
    let text = serialize_instance(&inst);
    match &args.out {
        Some(path) => {
            write_file(path, &text)?;
            Ok((EXIT_YES, String::new()))
        }
        None => Ok((EXIT_YES, text)),
    }
}
