// The maximum neighborhood weight greedy, step by step.

use temporal_tis::conflict::neighborhood_bound;
use temporal_tis::format::parse_instance;
use temporal_tis::graph::StaticGraph;
use temporal_tis::instance::{Layer, TemporalIntervalInstance, Vertex};
use temporal_tis::rational::Rational;
use temporal_tis::solvers::{solve_exact_bruteforce, solve_greedy_traced};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/fig1.tis"))?;
    let inst = parse_instance(&text)?;
    let (sol, steps) = solve_greedy_traced(&inst);
    for step in &steps {
        println!("pick {} removing {:?}", inst.name(step.picked), inst.names(&step.removed));
    }
    assert_eq!(inst.names(&sol.set), ["v1", "v4", "v5"]);

    // A heavy star center beats its three leaves.
    let star = StaticGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)])?;
    let mut vertices = vec![Vertex::weighted("c", Rational::integer(2))];
    vertices.extend(["a", "b", "d"].map(Vertex::new));
    let inst = TemporalIntervalInstance::new(vertices, 1, 0, vec![Layer::Edges(star)], false)?;
    let (greedy, _) = solve_greedy_traced(&inst);
    let opt = solve_exact_bruteforce(&inst)?;
    println!(
        "greedy {} optimum {} bound {}",
        greedy.weight,
        opt.weight,
        neighborhood_bound(&inst)
    );
    assert_eq!(greedy.weight, Rational::integer(2));
    assert_eq!(opt.weight, Rational::integer(3));
    assert!(greedy.weight * Rational::from(neighborhood_bound(&inst) as usize) >= opt.weight);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
