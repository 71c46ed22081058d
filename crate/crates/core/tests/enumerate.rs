mod common;

use std::collections::HashMap;

use common::{isomorphic, naive_classes, prufer};
use indroots::enumerate::*;
use indroots::families::{path, star, t1, t2};
use indroots::{canonical_key, indpoly, Girth, Graph};

/// Representatives up to isomorphism, found by permutation search within
/// degree-sequence buckets.
fn dedup(gs: impl IntoIterator<Item = Graph>) -> usize {
    let mut buckets: HashMap<Vec<usize>, Vec<Graph>> = HashMap::new();
    for g in gs {
        let mut d = g.degree_sequence();
        d.sort();
        let b = buckets.entry(d).or_default();
        if !b.iter().any(|r| isomorphic(r, &g)) {
            b.push(g);
        }
    }
    buckets.values().map(Vec::len).sum()
}

fn prufer_trees(n: usize) -> Vec<Graph> {
    if n <= 2 {
        return vec![path(n).unwrap()];
    }
    let total = n.pow(n as u32 - 2);
    (0..total)
        .map(|mut code| {
            let seq: Vec<usize> = (0..n - 2)
                .map(|_| {
                    let d = code % n;
                    code /= n;
                    d
                })
                .collect();
            prufer(n, &seq)
        })
        .collect()
}

#[test]
fn trees_match_prufer_oracle() {
    for n in 1..=8 {
        let ours = trees(n).unwrap();
        assert_eq!(ours.len(), dedup(prufer_trees(n)), "order {n}");
        assert!(ours.iter().all(Graph::is_tree));
    }
}

#[test]
fn unicyclic_match_oracle() {
    for n in 3..=7 {
        let candidates = prufer_trees(n).into_iter().flat_map(|t| {
            t.non_edges()
                .into_iter()
                .map(move |(u, v)| t.add_edge(u, v).unwrap())
        });
        let ours = connected_unicyclic(n).unwrap();
        assert_eq!(ours.len(), dedup(candidates), "order {n}");
        assert!(ours.iter().all(Graph::is_unicyclic));
    }
}

#[test]
fn connected_match_oracle() {
    let mut reps = Vec::new();
    for n in 1..=6 {
        reps = naive_classes(n, |_| true);
        assert_eq!(connected_graphs(n).unwrap().len(), reps.len(), "order {n}");
    }
    // order 7 from every one-vertex extension of the order-6 classes
    let grown = reps.iter().flat_map(|g| {
        (1u32..1 << 6).map(move |s| {
            let mut e = g.edges();
            e.extend((0..6).filter(|v| s >> v & 1 == 1).map(|v| (v, 6)));
            Graph::from_edges(7, &e).unwrap()
        })
    });
    assert_eq!(connected_graphs(7).unwrap().len(), dedup(grown));
    assert_eq!(connected_graphs(7).unwrap().len(), 853);
}

#[test]
fn girth_filter_is_exact() {
    for n in 3..=7 {
        for girth in 4..=6 {
            let expected = connected_graphs(n)
                .unwrap()
                .into_iter()
                .filter(|g| match g.girth() {
                    Girth::Finite(c) => c >= girth,
                    Girth::Infinite => true,
                })
                .count();
            assert_eq!(
                connected_graphs_with_girth(n, girth).unwrap().len(),
                expected
            );
        }
    }
}

#[test]
fn generation_is_stable() {
    let a: Vec<_> = trees(10).unwrap().iter().map(canonical_key).collect();
    let b: Vec<_> = trees(10).unwrap().iter().map(canonical_key).collect();
    assert_eq!(a, b);
    assert!(connected_graphs(9).is_err());
    assert!(connected_unicyclic(2).is_err());
}

#[test]
fn tree_surveys() {
    for n in 2..=9 {
        let r = survey_extremal(SurveyClass::Trees, n, &SurveyOptions::default()).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert_eq!(r.min_equivalents, vec![canonical_key(&path(n).unwrap())]);
        assert_eq!(r.max_equivalents, vec![canonical_key(&star(n).unwrap())]);
    }
    for m in 2..=6 {
        let r = survey_extremal(SurveyClass::WcTrees, 2 * m, &SurveyOptions::default()).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
    }
    for n in 2..=8 {
        let r = survey_extremal(SurveyClass::Bipartite, n, &SurveyOptions::default()).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
    }
}

#[test]
fn unicyclic_seven() {
    let r = survey_extremal(SurveyClass::Unicyclic, 7, &SurveyOptions::default()).unwrap();
    assert!(r.violations.is_empty());
    assert_eq!(r.min_equivalents.len() + r.max_equivalents.len(), 3);
    let classes = equivalence_classes(&connected_unicyclic(7).unwrap());
    let c7 = indpoly(&indroots::families::cycle(7).unwrap()).to_string();
    let class = classes.iter().find(|c| c.poly == c7).unwrap();
    assert_eq!(class.members.len(), 2);
}

#[test]
fn odd_well_covered_unicyclic() {
    let r = survey_extremal(SurveyClass::WcUnicyclicOdd, 9, &SurveyOptions::default()).unwrap();
    assert!(r.violations.is_empty());
    let sp: Vec<_> = sp_members(9).unwrap().iter().map(canonical_key).collect();
    assert!(sp.iter().all(|k| r.min_equivalents.contains(k)));
}

#[test]
fn antichains_among_trees() {
    let seven = antichains(&trees(7).unwrap(), 3, 1).unwrap();
    assert!(seven.incomparable_pairs.is_empty());
    assert_eq!(seven.largest.len(), 1);
    let eight = antichains(&trees(8).unwrap(), 3, 2).unwrap();
    let (a, b) = (canonical_key(&t1().unwrap()), canonical_key(&t2().unwrap()));
    assert!(eight
        .incomparable_pairs
        .iter()
        .any(|p| (p.left == a && p.right == b) || (p.left == b && p.right == a)));
    assert!(eight.largest.len() >= 2);
    let classes = equivalence_classes(&trees(8).unwrap());
    let holder = |k| classes.iter().position(|c| c.members.contains(k)).unwrap();
    assert_ne!(holder(&a), holder(&b));
}

#[test]
fn parallel_reports_are_identical() {
    let run = |w| {
        let o = SurveyOptions {
            workers: w,
            antichain: Some(3),
        };
        serde_json::to_string(&survey_extremal(SurveyClass::Unicyclic, 8, &o).unwrap()).unwrap()
    };
    assert_eq!(run(1), run(4));
}
