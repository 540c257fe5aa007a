// Recognizing order preservation and solving order-preserving instances
// exactly through an interval model of the conflict graph.

use temporal_tis::conflict::conflict_graph;
use temporal_tis::format::parse_instance;
use temporal_tis::generators::gen_order_preserving_weighted;
use temporal_tis::order_preservation::{conflict_interval_model, pooled_clique_matrix, recognize_order_preserving};
use temporal_tis::solvers::{solve_exact_bruteforce, solve_exact_op};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/fig2.tis"))?;
    let inst = parse_instance(&text)?;
    print!("{}", pooled_clique_matrix(&inst)?);
    let rep = recognize_order_preserving(&inst)?;
    println!("order preserving: {} witness {:?}", rep.is_order_preserving, inst.names(&rep.witness));
    assert!(!rep.is_order_preserving);

    let reduced = inst.remove_named(&["v4"])?;
    let ord = recognize_order_preserving(&reduced)?.ordering.expect("order preserving");
    println!("without v4: {:?}", reduced.names(ord.as_slice()));

    let model = conflict_interval_model(&reduced, &ord)?;
    assert_eq!(model.graph(), conflict_graph(&reduced));

    let random = gen_order_preserving_weighted(10, 3, 2, 0, 11, Some(5))?;
    let ord = recognize_order_preserving(&random)?.ordering.expect("generated order preserving");
    let fast = solve_exact_op(&random, &ord)?;
    let slow = solve_exact_bruteforce(&random)?;
    println!("interval solver {} brute force {}", fast.weight, slow.weight);
    assert_eq!(fast.weight, slow.weight);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
