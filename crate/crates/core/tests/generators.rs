mod common;

use proptest::prelude::*;

use temporal_tis::format::{parse_instance, serialize_instance};
use temporal_tis::generators::{gen_lcsp_gadget, gen_order_preserving, gen_random_unit, lcs_permutations};
use temporal_tis::order_preservation::recognize_order_preserving;
use temporal_tis::{Error, Rational};

#[test]
fn gadget_structure() {
    let perms = ["cab", "abc", "bca"];
    let g = gen_lcsp_gadget(&perms).unwrap();
    let n = 3;
    assert_eq!(g.n(), n + 2 * n * n);
    assert_eq!(g.tau(), 3);
    assert_eq!(g.delta(), 1);
    assert!(g.is_unit());
    let fix = |side: &str, j: usize| -> Vec<usize> {
        (1..=n).map(|h| g.index_of(&format!("{side}{j}_{h}")).unwrap()).collect()
    };
    for (t, p) in perms.iter().enumerate() {
        let lg = g.layer_graph(t + 1).unwrap();
        let mut want = std::collections::BTreeSet::new();
        let mut add = |a: usize, b: usize| {
            if a != b {
                want.insert((a.min(b), a.max(b)));
            }
        };
        let sigma: Vec<usize> = (0..n).collect();
        for &a in &sigma {
            for &b in &sigma {
                add(a, b);
            }
        }
        for side in ["L", "R"] {
            let part: Vec<usize> = (1..=n).flat_map(|j| fix(side, j)).collect();
            for &a in &part {
                for &b in &part {
                    add(a, b);
                }
            }
        }
        for (i0, c) in p.chars().enumerate() {
            let i = i0 + 1;
            let v = g.index_of(&c.to_string()).unwrap();
            for j in 1..=n {
                if j > i {
                    fix("L", j).into_iter().for_each(|u| add(u, v));
                }
                if j < i {
                    fix("R", j).into_iter().for_each(|u| add(u, v));
                }
            }
        }
        assert_eq!(lg.edge_set(), want, "layer {}", t + 1);
        for u in fix("L", 1).into_iter().chain(fix("R", n)) {
            assert!(sigma.iter().all(|&v| !lg.has_edge(u, v)));
        }
        for side in ["L", "R"] {
            for j in 1..=n {
                assert!(lg.is_clique(&fix(side, j)));
            }
        }
    }
}

#[test]
fn gadget_rejects_bad_input() {
    assert!(matches!(gen_lcsp_gadget(&["ab", "abc"]), Err(Error::NotPermutation(_))));
    assert!(matches!(gen_lcsp_gadget(&["aab"]), Err(Error::NotPermutation(_))));
    assert!(gen_lcsp_gadget::<&str>(&[]).is_err());
}

#[test]
fn lcs_values() {
    assert_eq!(lcs_permutations(&["abc", "abc"]).unwrap(), 3);
    assert_eq!(lcs_permutations(&["abc", "cba"]).unwrap(), 1);
    assert_eq!(lcs_permutations(&["abcd", "badc", "abdc", "bacd"]).unwrap(), 2);
}

#[test]
fn random_parameters_are_checked() {
    assert!(matches!(gen_random_unit(5, 2, 1, 0, 0, Rational::ZERO), Err(Error::InvalidParameter(_))));
    assert!(gen_random_unit(0, 2, 1, 0, 0, Rational::ONE).is_err());
    assert!(matches!(gen_random_unit(5, 2, 3, 0, 0, Rational::ONE), Err(Error::DeltaOutOfRange { .. })));
}

#[test]
fn single_vertex_op_instance() {
    let inst = gen_order_preserving(1, 3, 2, 1, 9).unwrap();
    assert_eq!(inst.n(), 1);
    assert!(recognize_order_preserving(&inst).unwrap().is_order_preserving);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generators_are_deterministic(seed in any::<u64>(), n in 1usize..15, tau in 1usize..5) {
        let a = gen_random_unit(n, tau, 1, 0, seed, Rational::integer(3)).unwrap();
        let b = gen_random_unit(n, tau, 1, 0, seed, Rational::integer(3)).unwrap();
        prop_assert_eq!(serialize_instance(&a), serialize_instance(&b));
        prop_assert!(a.is_unit());
        let round = parse_instance(&serialize_instance(&a)).unwrap();
        prop_assert_eq!(serialize_instance(&round), serialize_instance(&a));
        let c = gen_order_preserving(n, tau, 1, 0, seed).unwrap();
        prop_assert_eq!(serialize_instance(&c), serialize_instance(&gen_order_preserving(n, tau, 1, 0, seed).unwrap()));
        prop_assert!(recognize_order_preserving(&c).unwrap().is_order_preserving);
    }

    #[test]
    fn lcs_matches_chain_count(seed in 0u64..10_000) {
        let mut r = common::rng(seed);
        let n = 1 + (seed as usize % 6);
        let perms: Vec<String> = (0..1 + seed as usize % 4).map(|_| common::random_order(n, &mut r).iter().map(|&i| (b'a' + i as u8) as char).collect()).collect();
        prop_assert_eq!(lcs_permutations(&perms).unwrap(), common::lcs_by_chains(&perms));
    }
}
