// Exact solving with a deletion set as parameter.

use temporal_tis::format::parse_instance;
use temporal_tis::opvd::min_opvd;
use temporal_tis::solvers::{solve_exact_bruteforce, solve_fpt};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/fig2.tis"))?;
    let inst = parse_instance(&text)?;
    let s = inst.resolve(&["v4"])?;
    let sol = solve_fpt(&inst, &s)?;
    let opt = solve_exact_bruteforce(&inst)?;
    println!("fpt {:?} weight {}, optimum {}", inst.names(&sol.set), sol.weight, opt.weight);
    assert_eq!(sol.weight, opt.weight);

    let auto = min_opvd(&inst, None)?;
    assert_eq!(solve_fpt(&inst, &auto.deletion_set)?.weight, opt.weight);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
