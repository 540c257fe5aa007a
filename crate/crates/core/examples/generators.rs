// Seeded generators and the text format round trip.

use temporal_tis::format::{parse_instance, serialize_instance};
use temporal_tis::generators::{gen_order_preserving, gen_random_unit};
use temporal_tis::order_preservation::recognize_order_preserving;
use temporal_tis::rational::Rational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = gen_random_unit(5, 2, 1, 2, 42, Rational::integer(2))?;
    let text = serialize_instance(&a);
    print!("{text}");
    assert_eq!(text, serialize_instance(&gen_random_unit(5, 2, 1, 2, 42, Rational::integer(2))?));
    assert_eq!(parse_instance(&text)?, a);

    let op = gen_order_preserving(8, 3, 2, 0, 1)?;
    assert!(recognize_order_preserving(&op)?.is_order_preserving);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
