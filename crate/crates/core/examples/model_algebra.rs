// Normalizing two layers to a common right-endpoint ordering, then
// intersecting and uniting their models.

use temporal_tis::graph::{edge_intersection, edge_union};
use temporal_tis::instance::IntervalModel;
use temporal_tis::interval::{intersect_models, normalize_to_ordering, union_models, REOrdering};
use temporal_tis::rational::Rational;

fn model(pairs: &[(&str, &str)]) -> IntervalModel {
    IntervalModel::from_pairs(pairs.iter().map(|(l, r)| (l.parse().unwrap(), r.parse().unwrap()))).unwrap()
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Vertices v1, v2, v3, v5, v6 of the two-layer example without v4,
    // ordered (v3, v2, v1, v5, v6).
    let thick = model(&[("3/2", "3"), ("1/2", "2"), ("0", "1"), ("7/2", "4"), ("7/2", "5")]);
    let thin = model(&[("3/2", "3"), ("1/2", "2"), ("0", "1"), ("5/2", "4"), ("7/2", "5")]);
    let ord = REOrdering::new(vec![2, 1, 0, 3, 4])?;
    assert!(ord.agrees_with(&thick) && ord.agrees_with(&thin));

    let n1 = normalize_to_ordering(&thick, &ord)?;
    let n2 = normalize_to_ordering(&thin, &ord)?;
    assert_eq!(n1.graph(), thick.graph());
    assert_eq!(n2.graph(), thin.graph());
    for (v, (a, b)) in n1.intervals().iter().zip(n2.intervals()).enumerate() {
        println!("vertex {v}: [{}, {}] and [{}, {}]", a.left, a.right, b.left, b.right);
    }

    let meet = intersect_models(&n1, &n2)?;
    let join = union_models(&n1, &n2)?;
    assert_eq!(meet.graph(), edge_intersection(&thick.graph(), &thin.graph())?);
    assert_eq!(join.graph(), edge_union(&thick.graph(), &thin.graph())?);
    assert!(ord.agrees_with(&meet) && ord.agrees_with(&join));
    println!("intersection edges {:?}", meet.graph().edges().collect::<Vec<_>>());
    println!("union edges {:?}", join.graph().edges().collect::<Vec<_>>());
    assert_eq!(meet.interval(0).right, Rational::integer(3));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
