mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::arb_graph;
use indroots::enumerate::{
    connected_graphs_with_girth, connected_unicyclic, trees, well_covered_unicyclic_constructed,
};
use indroots::families::{corona, cycle};
use indroots::wellcovered::*;
use indroots::{canonical_key, Graph};
use proptest::prelude::*;

/// Maximal independent sets by checking every subset.
fn naive_sizes(g: &Graph) -> BTreeMap<usize, u64> {
    let n = g.order();
    let mut out = BTreeMap::new();
    for s in 0u32..1 << n {
        let inside = |v: usize| s >> v & 1 == 1;
        let independent = (0..n).all(|v| !inside(v) || g.neighbors(v).all(|w| !inside(w)));
        let maximal = (0..n).all(|v| inside(v) || g.neighbors(v).any(inside));
        if independent && maximal {
            *out.entry(s.count_ones() as usize).or_insert(0) += 1;
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn enumeration_matches_subsets(g in arb_graph(12)) {
        let r = maximal_independent_sets(&g).unwrap();
        prop_assert_eq!(&r.sizes, &naive_sizes(&g));
        prop_assert_eq!(r.min_witness.len(), r.min_size());
        prop_assert_eq!(r.max_witness.len(), r.max_size());
        prop_assert_eq!(r.max_size(), indroots::independence_number(&g));
    }
}

#[test]
fn girth_six_criterion() {
    let c7 = canonical_key(&cycle(7).unwrap());
    for n in 2..=12 {
        for g in connected_graphs_with_girth(n, 6).unwrap() {
            if canonical_key(&g) == c7 {
                assert!(is_well_covered(&g).unwrap());
                assert!(!pendant_edges_perfect_matching(&g));
                continue;
            }
            assert_eq!(
                is_well_covered(&g).unwrap(),
                pendant_edges_perfect_matching(&g)
            );
        }
    }
}

#[test]
fn well_covered_trees_are_coronas() {
    for n in 2..=12 {
        let coronas: BTreeSet<_> = if n % 2 == 0 {
            trees(n / 2)
                .unwrap()
                .iter()
                .map(|t| canonical_key(&corona(t).unwrap()))
                .collect()
        } else {
            BTreeSet::new()
        };
        for t in trees(n).unwrap() {
            let wc = is_well_covered(&t).unwrap();
            assert_eq!(wc, coronas.contains(&canonical_key(&t)));
            assert_eq!(wc, is_well_covered_tree(&t));
            if wc {
                assert!(is_very_well_covered(&t).unwrap());
            }
        }
    }
}

#[test]
fn well_covered_unicyclic_characterisation() {
    for n in 3..=11 {
        let found: BTreeSet<_> = connected_unicyclic(n)
            .unwrap()
            .iter()
            .filter(|g| is_well_covered(g).unwrap())
            .map(canonical_key)
            .collect();
        let built: BTreeSet<_> = well_covered_unicyclic_constructed(n)
            .unwrap()
            .iter()
            .map(canonical_key)
            .collect();
        assert_eq!(found, built, "order {n}");
    }
}

#[test]
fn refuses_large_graphs() {
    assert!(maximal_independent_sets(&Graph::empty(ENUMERATION_LIMIT + 1).unwrap()).is_err());
}
