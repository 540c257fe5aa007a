// Largest independent set inside a closed neighborhood of the conflict
// graph, against the window bound.

use temporal_tis::conflict::{
    conflict_graph, max_independent_in_closed_neighborhood, neighborhood_bound, neighborhood_is_bound_check,
};
use temporal_tis::format::parse_instance;
use temporal_tis::generators::gen_random_unit;
use temporal_tis::rational::Rational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // The three-layer example has a claw in its first layer, so it is not a
    // unit instance; the helper still works on its conflict graph.
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/fig1.tis"))?;
    let fig1 = parse_instance(&text)?;
    let g = conflict_graph(&fig1);
    let v3 = fig1.index_of("v3").unwrap();
    let mis = max_independent_in_closed_neighborhood(&g, v3);
    println!("MIS in N[v3] = {mis}, bound {}", neighborhood_bound(&fig1));
    assert!(neighborhood_is_bound_check(&fig1, v3).is_err());

    let inst = gen_random_unit(12, 3, 2, 0, 7, Rational::integer(3))?;
    for v in 0..inst.n() {
        assert!(neighborhood_is_bound_check(&inst, v)?);
    }
    println!("bound holds on all {} vertices", inst.n());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
