// A small benchmark run over generated instances.

use temporal_tis::bench::{rows_to_csv, run_bench, BenchOptions};
use temporal_tis::format::serialize_instance;
use temporal_tis::generators::{gen_order_preserving_weighted, gen_random_unit_weighted};
use temporal_tis::rational::Rational;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = tempfile::tempdir()?;
    for seed in 0..4 {
        let inst = gen_random_unit_weighted(8, 3, 2, 0, seed, Rational::integer(3), Some(4))?;
        std::fs::write(dir.path().join(format!("random{seed}.tis")), serialize_instance(&inst))?;
        let inst = gen_order_preserving_weighted(8, 2, 1, 0, seed, Some(4))?;
        std::fs::write(dir.path().join(format!("op{seed}.tis")), serialize_instance(&inst))?;
    }
    let opts = BenchOptions {
        omit_timing: true,
        ..BenchOptions::default()
    };
    let rows = run_bench(dir.path(), &opts)?;
    print!("{}", rows_to_csv(&rows));
    assert_eq!(rows.len(), 8 * 4);
    assert!(rows.iter().all(|r| r.verified != "FAIL" && r.bound_holds != Some(false)));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
