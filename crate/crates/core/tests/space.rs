mod common;

use std::collections::BTreeSet;

use num_bigint::BigUint;

use common::*;
use topsnut::graph::{canonical_code, Rule};
use topsnut::space::{
    count_rooted_trees, enumerate_trees, gpw_count_class, gpw_count_graph, log2, lookup_counts, parse_count, CountKind,
    SpaceError, SpaceParams,
};

/// Rooted classes: every labelled tree with every root, the root marked by
/// a distinct label.
fn rooted_by_prufer(p: usize) -> usize {
    let mut classes = BTreeSet::new();
    let total = p.pow((p - 2) as u32);
    for mut x in 0..total {
        let mut code = Vec::new();
        for _ in 0..p - 2 {
            code.push(x % p);
            x /= p;
        }
        let t = prufer_tree(&code);
        for r in 0..p {
            let labels: Vec<u64> = (0..p).map(|v| u64::from(v == r)).collect();
            classes.insert(canonical_code(&labelled(t.clone(), &labels, Rule::Free)).unwrap());
        }
    }
    classes.len()
}

#[test]
fn free_trees_match_prufer_census() {
    for p in 2..=7 {
        assert_eq!(enumerate_trees(p).unwrap().count(), count_trees_by_prufer(p), "p = {p}");
    }
}

#[test]
fn enumerated_trees_are_distinct_trees() {
    for p in 1..=11 {
        let trees: Vec<_> = enumerate_trees(p).unwrap().collect();
        assert!(trees.iter().all(|t| t.order() == p && t.is_tree()));
        let codes: BTreeSet<_> =
            trees.iter().map(|t| canonical_code(&topsnut::graph::TopsnutGpw::unlabelled(t.clone())).unwrap()).collect();
        assert_eq!(codes.len(), trees.len(), "p = {p}");
    }
}

#[test]
fn rooted_trees_match_prufer_census() {
    for p in 3..=6 {
        assert_eq!(count_rooted_trees(p), BigUint::from(rooted_by_prufer(p)), "p = {p}");
    }
}

#[test]
fn small_graph_table_rows() {
    for p in 1..=5 {
        let oracle = count_graphs(p);
        if let Ok(v) = lookup_counts(p, CountKind::Graphs) {
            assert_eq!(v, BigUint::from(oracle), "p = {p}");
        }
    }
    assert!(matches!(lookup_counts(99, CountKind::Trees), Err(SpaceError::Lookup { .. })));
}

#[test]
fn formula_against_plain_arithmetic() {
    let params = SpaceParams {
        a_c: 3u32.into(),
        n_c: 5u32.into(),
        a_l: 2u32.into(),
        n_l: 7u32.into(),
        a_set: 1u32.into(),
        n_set: 11u32.into(),
        k_c: 3,
        exponent: None,
    };
    let one = gpw_count_graph(4, 3, &params).unwrap();
    assert_eq!(one.count, BigUint::from(3u64.pow(7) * (15 + 14 + 11)));
    let class = gpw_count_class(4, 3, &BigUint::from(2u32), &params).unwrap();
    assert_eq!(class.count, &one.count * 2u32);
    assert!((class.bits - (class.count.to_string().parse::<f64>().unwrap()).log2()).abs() < 1e-9);

    let huge = BigUint::from(3u32).pow(500) + 12345u32;
    assert!((log2(&huge) - 500.0 * 3f64.log2()).abs() < 1e-9);

    let mut bad = params.clone();
    bad.k_c = 1;
    assert_eq!(gpw_count_graph(4, 3, &bad), Err(SpaceError::Palette(1)));
    assert_eq!(gpw_count_graph(4, 3, &SpaceParams::default()), Err(SpaceError::DegenerateParams));
    assert_eq!(gpw_count_class(4, 3, &BigUint::default(), &params), Err(SpaceError::EmptyClass));
    assert_eq!(gpw_count_graph(4, 3, &params.with_exponent(1 << 40)), Err(SpaceError::Exponent(1 << 40)));
}

#[test]
fn count_expressions() {
    assert_eq!(parse_count("106").unwrap(), BigUint::from(106u32));
    assert_eq!(parse_count("10!").unwrap(), BigUint::from(3628800u32));
    assert_eq!(parse_count("2^18 * 3").unwrap(), BigUint::from(786432u32));
    assert!(parse_count("ten").is_err());
    assert!(parse_count("2^x").is_err());
}
