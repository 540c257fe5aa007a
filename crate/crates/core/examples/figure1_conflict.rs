// Conflict graph of the three-layer example, its maximum Δ-independent
// set, and direct verification against the layers.
//
// ```text
// cargo run --example figure1_conflict
// ```

use temporal_tis::conflict::{conflict_graph, delta_independence_check};
use temporal_tis::format::{parse_instance, sorted_named_edges};
use temporal_tis::solvers::{solve_exact_bruteforce, verify_solution};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/fig1.tis"))?;
    let inst = parse_instance(&text)?;

    let g = conflict_graph(&inst);
    let edges = sorted_named_edges(&inst, &g);
    println!("conflict edges: {edges:?}");
    assert_eq!(
        edges,
        vec![("v1", "v2"), ("v1", "v3"), ("v2", "v3"), ("v2", "v4"), ("v3", "v5")]
    );

    let best = solve_exact_bruteforce(&inst)?;
    println!("optimum {} = {:?}", best.weight, inst.names(&best.set));
    assert_eq!(best.cardinality(), 3);

    let s = inst.resolve(&["v1", "v4", "v5"])?;
    let report = verify_solution(&inst, &s)?;
    assert!(report.accepted());

    // v1 and v2 share an edge in every layer.
    let pair = inst.resolve(&["v1", "v2"])?;
    let check = delta_independence_check(&inst, &pair)?;
    println!("{{v1, v2}}: {:?}", check.violation);
    assert!(!check.independent);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
