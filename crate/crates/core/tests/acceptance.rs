//! Acceptance suite. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion; exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::Rng;

use temporal_tis::cli::run;
use temporal_tis::conflict::{conflict_graph, max_independent_in_closed_neighborhood, neighborhood_bound};
use temporal_tis::format::{parse_instance, serialize_instance, sorted_named_edges};
use temporal_tis::generators::{gen_lcsp_gadget, gen_order_preserving_weighted, gen_random_unit, lcs_permutations};
use temporal_tis::graph::{edge_intersection, edge_union};
use temporal_tis::interval::{c1p_test, intersect_models, normalize_to_ordering, union_models, BinaryMatrix, C1pResult, REOrdering};
use temporal_tis::opvd::{min_opvd, min_opvd_restricted, opvd_exhaustive};
use temporal_tis::order_preservation::{common_ordering_exhaustive, conflict_interval_model, recognize_order_preserving};
use temporal_tis::rational::Rational;
use temporal_tis::solvers::{solve_exact_bruteforce, solve_exact_op, solve_fpt, solve_greedy, verify_solution};
use temporal_tis::WindowSemantics;

use common::*;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn load(name: &str) -> temporal_tis::TemporalIntervalInstance {
    parse_instance(&std::fs::read_to_string(data(name)).unwrap()).unwrap()
}

fn figure1() -> Outcome {
    let inst = load("fig1.tis");
    let g = conflict_graph(&inst);
    let edges = sorted_named_edges(&inst, &g);
    let expected = vec![("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v2", "v4"), ("v3", "v5")];
    ensure!(edges == expected, "conflict edges {edges:?}");
    let best = solve_exact_bruteforce(&inst).map_err(|e| e.to_string())?;
    ensure!(best.cardinality() == 3, "optimum cardinality {}", best.cardinality());
    let s = inst.resolve(&["v1", "v4", "v5"]).unwrap();
    let rep = verify_solution(&inst, &s).unwrap();
    ensure!(rep.accepted(), "{{v1,v4,v5}} rejected: {rep:?}");
    Ok(format!("5 conflict edges, optimum {:?}", inst.names(&best.set)))
}

fn figure2() -> Outcome {
    let inst = load("fig2.tis");
    let rep = recognize_order_preserving(&inst).map_err(|e| e.to_string())?;
    ensure!(!rep.is_order_preserving, "recognized as order preserving");
    let res = min_opvd(&inst, None).map_err(|e| e.to_string())?;
    ensure!(res.size() == 1, "min deletion set size {}", res.size());
    let reduced = inst.remove_named(&["v4"]).unwrap();
    let ord = recognize_order_preserving(&reduced).unwrap().ordering;
    ensure!(ord.is_some(), "removing v4 does not give an order preserving instance");
    let want = REOrdering::new(
        ["v3", "v2", "v1", "v5", "v6"].iter().map(|n| reduced.index_of(n).unwrap()).collect(),
    )
    .unwrap();
    for g in reduced.layer_graphs() {
        ensure!(want.is_proper_ordering_of(&g), "(v3,v2,v1,v5,v6) rejected by a layer");
    }
    Ok(format!(
        "witness {:?}, min deletion {:?}",
        inst.names(&rep.witness),
        inst.names(&res.deletion_set)
    ))
}

fn corpus() -> Vec<temporal_tis::TemporalIntervalInstance> {
    (0..500).map(|i| unit_instance(1000 + i, 4, 14, 4)).collect()
}

fn greedy_ratio() -> Outcome {
    let mut worst = Rational::ONE;
    for (i, inst) in corpus().iter().enumerate() {
        let bound = ((inst.tau() - inst.delta() + 1) << inst.delta()) as usize;
        ensure!(bound as u64 == neighborhood_bound(inst), "bound mismatch on #{i}");
        let g = solve_greedy(inst);
        let opt = solve_exact_bruteforce(inst).unwrap();
        ensure!(
            g.weight * Rational::from(bound) >= opt.weight,
            "instance #{i}: greedy {} optimum {} bound {bound}",
            g.weight,
            opt.weight
        );
        if !g.weight.is_zero() {
            worst = worst.max(opt.weight / g.weight);
        }
    }
    Ok(format!("500 instances, worst observed ratio {worst}"))
}

fn neighborhood_bound_check() -> Outcome {
    let mut checked = 0;
    let mut largest = 0;
    for (i, inst) in corpus().iter().enumerate() {
        let g = conflict_graph(inst);
        let bound = ((inst.tau() - inst.delta() + 1) << inst.delta()) as usize;
        for v in 0..inst.n() {
            let m = max_independent_in_closed_neighborhood(&g, v);
            ensure!(m <= bound, "instance #{i}, vertex {v}: {m} > {bound}");
            largest = largest.max(m);
            checked += 1;
        }
    }
    Ok(format!("{checked} vertices, largest neighborhood MIS {largest}"))
}

fn closure() -> Outcome {
    let mut r = rng(5);
    for i in 0..500 {
        let n = r.gen_range(1..=10);
        let order = random_order(n, &mut r);
        let ord = REOrdering::new(order.clone()).unwrap();
        let (a, b) = (re_model(&order, &mut r), re_model(&order, &mut r));
        let (ga, gb) = (a.graph(), b.graph());
        let na = normalize_to_ordering(&a, &ord).map_err(|e| format!("pair #{i}: {e}"))?;
        let nb = normalize_to_ordering(&b, &ord).map_err(|e| format!("pair #{i}: {e}"))?;
        ensure!(na.graph() == ga && nb.graph() == gb, "pair #{i}: normalization changed a graph");
        let meet = intersect_models(&na, &nb).unwrap();
        let join = union_models(&na, &nb).unwrap();
        ensure!(meet.graph() == edge_intersection(&ga, &gb).unwrap(), "pair #{i}: intersection");
        ensure!(join.graph() == edge_union(&ga, &gb).unwrap(), "pair #{i}: union");
        ensure!(ord.agrees_with(&meet) && ord.agrees_with(&join), "pair #{i}: agreement");
    }
    Ok("500 pairs".into())
}

fn op_exact_solver() -> Outcome {
    for i in 0..200u64 {
        let mut inst = op_instance(2000 + i, 14);
        if i % 4 == 3 {
            inst = inst.with_semantics(WindowSemantics::Formula);
        }
        let ord = recognize_order_preserving(&inst)
            .unwrap()
            .ordering
            .ok_or(format!("instance #{i} not recognized"))?;
        let model = conflict_interval_model(&inst, &ord).map_err(|e| e.to_string())?;
        ensure!(model.graph() == conflict_graph(&inst), "instance #{i}: model graph differs");
        let fast = solve_exact_op(&inst, &ord).unwrap();
        let slow = solve_exact_bruteforce(&inst).unwrap();
        ensure!(fast.weight == slow.weight, "instance #{i}: {} vs {}", fast.weight, slow.weight);
    }
    Ok("200 instances".into())
}

fn c1p_iff() -> Outcome {
    let (mut yes, mut no) = (0, 0);
    for i in 0..200u64 {
        let mut r = rng(3000 + i);
        let n = r.gen_range(2..=7);
        let tau = r.gen_range(1..=3);
        let spread = Rational::new(r.gen_range(n as i128..=3 * n as i128), 3);
        let inst = gen_random_unit(n, tau, 1, 0, 3000 + i, spread).unwrap();
        let fast = recognize_order_preserving(&inst).unwrap().is_order_preserving;
        let slow = common_ordering_exhaustive(&inst, 7).unwrap().is_some();
        ensure!(fast == slow, "instance #{i}: C1P says {fast}, exhaustive says {slow}");
        if fast {
            yes += 1;
        } else {
            no += 1;
        }
    }
    Ok(format!("200 instances ({yes} order preserving, {no} not)"))
}

fn opvd_and_fpt() -> Outcome {
    let mut sizes = Vec::new();
    for i in 0..100u64 {
        let inst = unit_instance(4000 + i, 3, 12, 3);
        let a = min_opvd(&inst, None).unwrap();
        let b = opvd_exhaustive(&inst).unwrap();
        ensure!(a.size() == b.size(), "instance #{i}: search {} exhaustive {}", a.size(), b.size());
        sizes.push(a.size());
    }
    for i in 0..200u64 {
        let inst = unit_instance(5000 + i, 3, 14, 3);
        let s = min_opvd(&inst, None).unwrap();
        let fpt = solve_fpt(&inst, &s.deletion_set).unwrap();
        let opt = solve_exact_bruteforce(&inst).unwrap();
        ensure!(fpt.weight == opt.weight, "instance #{i}: fpt {} optimum {}", fpt.weight, opt.weight);
    }
    Ok(format!(
        "100 + 200 instances, deletion set sizes up to {}",
        sizes.iter().max().unwrap()
    ))
}

fn reduction_law() -> Outcome {
    let mut cases: Vec<Vec<String>> = Vec::new();
    for alphabet in ["ab", "abc"] {
        let perms = all_permutations(alphabet);
        for tau in 1..=3 {
            let mut idx = vec![0; tau - 1];
            loop {
                let mut set = vec![alphabet.to_string()];
                set.extend(idx.iter().map(|&j| perms[j].clone()));
                cases.push(set);
                let mut k = 0;
                while k < idx.len() && idx[k] + 1 == perms.len() {
                    idx[k] = 0;
                    k += 1;
                }
                if k == idx.len() {
                    break;
                }
                idx[k] += 1;
            }
        }
    }
    let four = all_permutations("abcd");
    let mut r = rng(6);
    for _ in 0..30 {
        let tau = r.gen_range(2..=3);
        cases.push((0..tau).map(|_| four[r.gen_range(0..four.len())].clone()).collect());
    }
    let mut cross_checked = 0;
    for (i, perms) in cases.iter().enumerate() {
        let n = perms[0].len();
        let gadget = gen_lcsp_gadget(perms).unwrap();
        let lcs = lcs_permutations(perms).unwrap();
        ensure!(lcs == lcs_by_chains(perms), "case #{i} {perms:?}: LCS oracles disagree");
        let sigma: Vec<usize> = (0..n).collect();
        let res = min_opvd_restricted(&gadget, &sigma, None).unwrap();
        ensure!(
            res.size() == n - lcs,
            "case #{i} {perms:?}: deletion {} but n - LCS = {}",
            res.size(),
            n - lcs
        );
        ensure!(res.deletion_set.iter().all(|&v| v < n), "case #{i}: deletion outside the alphabet");
        if n <= 2 {
            let full = opvd_exhaustive(&gadget).unwrap();
            ensure!(full.size() == res.size(), "case #{i}: unrestricted exhaustive {}", full.size());
            cross_checked += 1;
        } else if n == 3 && perms.len() <= 2 {
            let full = min_opvd(&gadget, None).unwrap();
            ensure!(full.size() == res.size(), "case #{i}: unrestricted search {}", full.size());
            ensure!(full.deletion_set.iter().all(|&v| v < n), "case #{i}: unrestricted set leaves the alphabet");
            cross_checked += 1;
        }
    }
    Ok(format!("{} permutation sets, {cross_checked} cross-checked without restriction", cases.len()))
}

fn c1p_oracle() -> Outcome {
    let mut r = rng(7);
    let (mut yes, mut no) = (0, 0);
    for i in 0..1000 {
        let cols = r.gen_range(1..=8);
        let nrows = r.gen_range(1..=7);
        let order = random_order(cols, &mut r);
        let rows: Vec<Vec<usize>> = (0..nrows)
            .map(|_| {
                if r.gen_bool(0.7) {
                    // A run in a hidden order, sometimes with one extra column.
                    let a = r.gen_range(0..cols);
                    let b = r.gen_range(a..cols);
                    let mut row: Vec<usize> = order[a..=b].to_vec();
                    if r.gen_bool(0.3) {
                        row.push(r.gen_range(0..cols));
                    }
                    row
                } else {
                    (0..cols).filter(|_| r.gen_bool(0.4)).collect()
                }
            })
            .collect();
        let m = BinaryMatrix::new(cols, rows.clone());
        let all: Vec<usize> = (0..cols).collect();
        let truth = c1p_bruteforce(&all, m.rows());
        match c1p_test(&m) {
            C1pResult::Ordering(o) => {
                ensure!(truth, "matrix #{i}: ordering {o:?} for a non-C1P matrix");
                ensure!(m.is_consecutive_under(&o), "matrix #{i}: invalid ordering");
                yes += 1;
            }
            C1pResult::Witness(w) => {
                ensure!(!truth, "matrix #{i}: witness for a C1P matrix {rows:?}");
                ensure!(!c1p_bruteforce(&w, m.rows()), "matrix #{i}: witness is C1P");
                for j in 0..w.len() {
                    let mut sub = w.clone();
                    sub.remove(j);
                    ensure!(c1p_bruteforce(&sub, m.rows()), "matrix #{i}: witness not minimal");
                }
                no += 1;
            }
        }
    }
    Ok(format!("1000 matrices ({yes} C1P, {no} not)"))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = dir.path();
    for seed in 0..6 {
        let inst = gen_order_preserving_weighted(7, 3, 2, 2, seed, Some(3)).unwrap();
        std::fs::write(d.join(format!("op{seed}.tis")), serialize_instance(&inst)).unwrap();
        let inst = gen_random_unit(7, 2, 1, 3, seed, Rational::integer(3)).unwrap();
        std::fs::write(d.join(format!("rand{seed}.tis")), serialize_instance(&inst)).unwrap();
    }
    std::fs::write(d.join("broken.tis"), "tis 1\nmode nonsense\n").unwrap();
    let (fig1, fig2, empty) = (data("fig1.tis"), data("fig2.tis"), data("empty.tis"));
    let dir_s = d.to_string_lossy().to_string();
    let commands: Vec<Vec<&str>> = vec![
        vec!["validate", &fig1],
        vec!["validate", &fig2],
        vec!["conflict", &fig1],
        vec!["conflict", &fig1, "--out", "dot"],
        vec!["--window-semantics", "formula", "conflict", &fig1],
        vec!["solve", &fig1, "--alg", "exact"],
        vec!["solve", &fig1, "--alg", "greedy"],
        vec!["solve", &fig2, "--alg", "fpt", "--opvd", "auto"],
        vec!["solve", &fig2, "--alg", "fpt", "--opvd-set", "v4"],
        vec!["solve", &fig2, "--alg", "op"],
        vec!["solve", &empty, "--alg", "exact"],
        vec!["--limit-oracle", "3", "solve", &fig1, "--alg", "exact"],
        vec!["opvd", &fig2],
        vec!["opvd", &fig2, "--exact"],
        vec!["opvd", &fig2, "--budget", "0"],
        vec!["recognize", &fig1],
        vec!["recognize", &fig2],
        vec!["--seed", "9", "gen", "random", "--n", "8", "--tau", "3", "--delta", "2"],
        vec!["--seed", "9", "gen", "op", "--n", "8", "--max-weight", "4"],
        vec!["gen", "lcsp", "--perms", "abc,acb"],
        vec!["bench", &dir_s, "--omit-timing"],
        vec!["bench", &dir_s, "--omit-timing", "--threads", "1"],
        vec!["bench", &dir_s, "--omit-timing", "--threads", "4"],
    ];
    let mut outputs = Vec::new();
    for cmd in &commands {
        let argv: Vec<&str> = std::iter::once("tis").chain(cmd.iter().copied()).collect();
        let a = run(argv.clone());
        let b = run(argv.clone());
        ensure!(a == b, "`{}` differs between runs", cmd.join(" "));
        let exe = std::process::Command::new(env!("CARGO_BIN_EXE_tis"))
            .args(cmd)
            .output()
            .map_err(|e| e.to_string())?;
        ensure!(
            exe.stdout == a.stdout.as_bytes() && exe.status.code() == Some(a.code),
            "`{}`: binary output differs from library run",
            cmd.join(" ")
        );
        outputs.push(a);
    }
    let n = commands.len();
    ensure!(
        outputs[n - 1].stdout == outputs[n - 2].stdout && outputs[n - 2].stdout == outputs[n - 3].stdout,
        "bench output depends on the thread count"
    );
    let par: Vec<_> = {
        use rayon::prelude::*;
        commands
            .par_iter()
            .map(|cmd| run(std::iter::once("tis").chain(cmd.iter().copied())))
            .collect()
    };
    ensure!(par == outputs, "outputs differ when commands run concurrently");
    Ok(format!("{n} commands, repeated, via binary and concurrently"))
}

fn main() {
    let criteria: Vec<(&str, fn() -> Outcome)> = vec![
        ("figure 1 reproduction", figure1),
        ("figure 2 reproduction", figure2),
        ("greedy approximation bound", greedy_ratio),
        ("closed neighborhood independence bound", neighborhood_bound_check),
        ("intersection and union closure", closure),
        ("conflict interval model and exact solver", op_exact_solver),
        ("C1P recognition equals exhaustive ordering search", c1p_iff),
        ("deletion set search and parameterized solver", opvd_and_fpt),
        ("permutation gadget reduction law", reduction_law),
        ("C1P test equals permutation brute force", c1p_oracle),
        ("CLI determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} [PRIMARY] {name}: PASS ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} [PRIMARY] {name}: FAIL ({why}; {secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
