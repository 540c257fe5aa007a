// Driving the `tis` command line from code.

use temporal_tis::cli::run;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let fig1 = concat!(env!("CARGO_MANIFEST_DIR"), "/data/fig1.tis");
    let fig2 = concat!(env!("CARGO_MANIFEST_DIR"), "/data/fig2.tis");

    let out = run(["tis", "solve", fig1, "--alg", "greedy"]);
    print!("{}", out.stdout);
    assert_eq!(out.code, 0);

    let out = run(["tis", "recognize", fig2]);
    print!("{}", out.stdout);
    assert_eq!(out.code, 1);

    let out = run(["tis", "--window-semantics", "formula", "conflict", fig1]);
    print!("{}", out.stdout);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
