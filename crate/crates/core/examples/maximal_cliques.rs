// Maximal cliques from a model sweep and from an abstract graph.

use temporal_tis::graph::StaticGraph;
use temporal_tis::instance::IntervalModel;
use temporal_tis::interval::{maximal_cliques, maximal_cliques_abstract};
use temporal_tis::rational::Rational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let half = Rational::new(1, 2);
    let model = IntervalModel::from_pairs([
        (Rational::ZERO, Rational::ONE),
        (half, Rational::ONE + half),
        (Rational::ONE, Rational::integer(2)),
    ])?;
    let cliques = maximal_cliques(&model);
    println!("model cliques: {cliques:?}");
    assert_eq!(cliques, vec![vec![0, 1, 2]]);

    let path = StaticGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)])?;
    println!("path cliques: {:?}", maximal_cliques_abstract(&path)?);

    let c4 = StaticGraph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let err = maximal_cliques_abstract(&c4).unwrap_err();
    println!("4-cycle: {err}");
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
