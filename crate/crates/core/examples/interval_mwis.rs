// Maximum-weight independent set on an interval model.

use temporal_tis::instance::IntervalModel;
use temporal_tis::interval::mwis_interval;
use temporal_tis::rational::Rational;

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let model = IntervalModel::from_pairs([(r("0"), r("1")), (r("1/2"), r("3/2")), (r("6/5"), r("11/5"))])?;
    let unit = mwis_interval(&model, &[Rational::ONE; 3])?;
    println!("unit weights: {:?} weight {}", unit.set, unit.weight);
    assert_eq!(unit.set, vec![0, 2]);

    let heavy = mwis_interval(&model, &[r("1"), r("3"), r("1")])?;
    println!("heavy middle: {:?} weight {}", heavy.set, heavy.weight);
    assert_eq!(heavy.weight, r("3"));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
