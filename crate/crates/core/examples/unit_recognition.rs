// Unit interval models for abstract graphs.

use temporal_tis::graph::StaticGraph;
use temporal_tis::interval::recognize_unit_interval;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p4 = StaticGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)])?;
    let model = recognize_unit_interval(&p4)?;
    for (v, iv) in model.intervals().iter().enumerate() {
        println!("v{v}: [{}, {}]", iv.left, iv.right);
    }
    assert_eq!(model.graph(), p4);

    let claw = StaticGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)])?;
    let refusal = recognize_unit_interval(&claw).unwrap_err();
    println!("claw: {refusal}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
