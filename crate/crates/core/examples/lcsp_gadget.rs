// The permutation gadget: minimum deletion set size equals alphabet size
// minus the longest common subsequence.

use temporal_tis::generators::{gen_lcsp_gadget, lcs_permutations};
use temporal_tis::opvd::min_opvd_restricted;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for perms in [vec!["abc"], vec!["ab", "ba"], vec!["abc", "acb"], vec!["abcd", "badc", "cdab"]] {
        let gadget = gen_lcsp_gadget(&perms)?;
        let n = perms[0].len();
        let alphabet: Vec<usize> = (0..n).collect();
        let res = min_opvd_restricted(&gadget, &alphabet, None)?;
        let lcs = lcs_permutations(&perms)?;
        println!(
            "{perms:?}: |V| = {}, deletion {:?}, lcs {lcs}",
            gadget.n(),
            gadget.names(&res.deletion_set)
        );
        assert_eq!(res.size(), n - lcs);
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
