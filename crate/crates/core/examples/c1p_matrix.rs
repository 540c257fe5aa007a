// Consecutive ones testing with orderings and minimal witnesses.

use temporal_tis::interval::{c1p_test, BinaryMatrix, C1pResult};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let chain = BinaryMatrix::new(3, vec![vec![0, 1], vec![1, 2]]);
    let res = c1p_test(&chain);
    println!("chain: {res:?}");
    assert!(chain.is_consecutive_under(res.ordering().unwrap()));

    let triangle = BinaryMatrix::new(4, vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![3]]);
    match c1p_test(&triangle) {
        C1pResult::Witness(cols) => {
            println!("triangle witness: {cols:?}");
            assert_eq!(cols, vec![0, 1, 2]);
        }
        C1pResult::Ordering(o) => panic!("unexpected ordering {o:?}"),
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
