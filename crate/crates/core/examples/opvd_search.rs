// Deletion sets to order preservation: branching search, exhaustive
// oracle and the column deletion view.

use temporal_tis::format::parse_instance;
use temporal_tis::opvd::{min_opvd, opvd_exhaustive, reduce_to_column_deletion, verify_opvd_set};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/fig2.tis"))?;
    let inst = parse_instance(&text)?;

    let res = min_opvd(&inst, None)?;
    println!("min deletion set {:?}, ordering {:?}", inst.names(&res.deletion_set), inst.names(&res.ordering));
    assert_eq!(res.size(), 1);
    assert_eq!(opvd_exhaustive(&inst)?.size(), 1);

    let v4 = inst.resolve(&["v4"])?;
    let ord = verify_opvd_set(&inst, &v4)?;
    println!("{{v4}} also works: {ord}");

    let red = reduce_to_column_deletion(&inst)?;
    assert!(!red.matrix.c1p().is_c1p());
    assert!(red.is_c1p_after(&inst, &v4)?);
    assert!(min_opvd(&inst, Some(0)).is_err());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
