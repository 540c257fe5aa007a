mod common;

use proptest::prelude::*;

use temporal_tis::conflict::conflict_graph;
use temporal_tis::format::parse_instance;
use temporal_tis::graph::edge_intersection;
use temporal_tis::interval::{normalize_to_ordering, REOrdering};
use temporal_tis::order_preservation::{
    common_ordering_exhaustive, conflict_interval_model, pooled_clique_matrix, recognize_order_preserving,
};
use temporal_tis::{Error, Layer, TemporalIntervalInstance, WindowSemantics};

fn fig2() -> TemporalIntervalInstance {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/fig2.tis");
    parse_instance(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn figure2_pooled_matrix() {
    let inst = fig2();
    let m = pooled_clique_matrix(&inst).unwrap();
    assert!(!m.c1p().is_c1p());
    let reduced = inst.remove_named(&["v4"]).unwrap();
    let m = pooled_clique_matrix(&reduced).unwrap();
    let want: Vec<usize> = ["v3", "v2", "v1", "v5", "v6"].iter().map(|v| reduced.index_of(v).unwrap()).collect();
    assert!(m.to_binary().is_consecutive_under(&want));
}

#[test]
fn figure2_witness_is_minimal() {
    let inst = fig2();
    let rep = recognize_order_preserving(&inst).unwrap();
    assert!(!rep.is_order_preserving);
    assert!(!recognize_order_preserving(&inst.induce(&rep.witness)).unwrap().is_order_preserving);
    for i in 0..rep.witness.len() {
        let mut sub = rep.witness.clone();
        sub.remove(i);
        assert!(recognize_order_preserving(&inst.induce(&sub)).unwrap().is_order_preserving);
    }
}

#[test]
fn non_unit_instances_are_refused() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/fig1.tis");
    let inst = parse_instance(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(recognize_order_preserving(&inst), Err(Error::NotUnit));
}

#[test]
fn two_layer_intersection_model() {
    for seed in 0..50 {
        let inst = temporal_tis::generators::gen_order_preserving(9, 2, 2, 0, seed).unwrap();
        let ord = recognize_order_preserving(&inst).unwrap().ordering.unwrap();
        let g = conflict_interval_model(&inst, &ord).unwrap().graph();
        let layers = inst.layer_graphs();
        assert_eq!(g, edge_intersection(&layers[0], &layers[1]).unwrap());
    }
}

#[test]
fn single_layer_model_is_its_normalization() {
    let inst = temporal_tis::generators::gen_order_preserving(7, 1, 1, 0, 3).unwrap();
    let ord = recognize_order_preserving(&inst).unwrap().ordering.unwrap();
    let Layer::Model(m) = &inst.layers()[0] else { unreachable!() };
    assert_eq!(conflict_interval_model(&inst, &ord).unwrap(), normalize_to_ordering(m, &ord).unwrap());
}

#[test]
fn incompatible_ordering_is_reported() {
    let inst = fig2().remove_named(&["v4"]).unwrap();
    let bad = REOrdering::new(vec![0, 2, 1, 3, 4]).unwrap();
    assert!(matches!(
        conflict_interval_model(&inst, &bad),
        Err(Error::OrderingIncompatible { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recognition_is_constructive(seed in 0u64..10_000) {
        let inst = common::unit_instance(seed, 2, 12, 3);
        let rep = recognize_order_preserving(&inst).unwrap();
        if let Some(ord) = &rep.ordering {
            for t in 0..inst.tau() {
                let Layer::Model(m) = &inst.layers()[t] else { unreachable!() };
                prop_assert!(normalize_to_ordering(m, ord).is_ok());
            }
        } else {
            prop_assert!(!rep.witness.is_empty());
        }
    }

    #[test]
    fn recognition_matches_exhaustive(seed in 0u64..10_000) {
        let inst = common::unit_instance(seed, 2, 7, 3);
        let fast = recognize_order_preserving(&inst).unwrap().is_order_preserving;
        prop_assert_eq!(fast, common_ordering_exhaustive(&inst, 7).unwrap().is_some());
    }

    #[test]
    fn conflict_model_matches_conflict_graph(seed in 0u64..10_000, formula in any::<bool>()) {
        let mut inst = common::op_instance(seed, 12);
        if formula {
            inst = inst.with_semantics(WindowSemantics::Formula);
        }
        let ord = recognize_order_preserving(&inst).unwrap().ordering.unwrap();
        prop_assert_eq!(conflict_interval_model(&inst, &ord).unwrap().graph(), conflict_graph(&inst));
    }
}
