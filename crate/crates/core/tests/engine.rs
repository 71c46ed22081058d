mod common;

use common::arb_graph;
use indroots::engine::{independence_number_search, indpoly_with, PolyCache};
use indroots::enumerate::{connected_unicyclic, trees};
use indroots::{corona, indpoly, indpoly_bruteforce, indpoly_clique, Graph, Poly};
use num_bigint::BigInt;
use proptest::prelude::*;

/// Grow a maximal clique greedily from `start`.
fn maximal_clique(g: &Graph, start: usize) -> Vec<usize> {
    let mut c = vec![start];
    for v in 0..g.order() {
        if v != start && c.iter().all(|&u| g.has_edge(u, v)) {
            c.push(v);
        }
    }
    c
}

fn check_routes(g: &Graph) {
    let p = indpoly(g);
    assert_eq!(
        p,
        indpoly_bruteforce(g).unwrap(),
        "{}",
        indroots::render_graph6(g)
    );
    for start in 0..g.order() {
        assert_eq!(p, indpoly_clique(g, &maximal_clique(g, start)).unwrap());
    }
    assert_eq!(p.coeff(0), BigInt::from(1));
    assert_eq!(p.coeff(1), BigInt::from(g.order()));
    assert_eq!(p.degree().unwrap(), independence_number_search(g));
}

#[test]
fn tree_and_unicyclic_corpus() {
    for n in 1..=10 {
        for t in trees(n).unwrap() {
            check_routes(&t);
        }
    }
    for n in 3..=10 {
        for g in connected_unicyclic(n).unwrap() {
            check_routes(&g);
        }
    }
}

#[test]
fn random_corpus() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let n = rng.gen_range(1..=10);
        let p: f64 = rng.gen_range(0.1..0.9);
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    e.push((u, v));
                }
            }
        }
        check_routes(&Graph::from_edges(n, &e).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn union_multiplies(g in arb_graph(8), h in arb_graph(8)) {
        prop_assert_eq!(indpoly(&g.disjoint_union(&h).unwrap()), &indpoly(&g) * &indpoly(&h));
    }

    #[test]
    fn corona_formula(g in arb_graph(8)) {
        let lhs = indpoly(&corona(&g).unwrap());
        prop_assert_eq!(lhs, indpoly(&g).corona_transform(g.order()).unwrap());
    }

    #[test]
    fn larger_graphs_agree(g in arb_graph(18)) {
        prop_assert_eq!(indpoly(&g), indpoly_bruteforce(&g).unwrap());
    }
}

#[test]
fn corona_formula_on_all_small_trees() {
    for n in 1..=8 {
        for t in trees(n).unwrap() {
            assert_eq!(
                indpoly(&corona(&t).unwrap()),
                indpoly(&t).corona_transform(n).unwrap()
            );
        }
    }
}

#[test]
fn bruteforce_refuses_large_graphs() {
    let g = Graph::empty(26).unwrap();
    assert!(indpoly_bruteforce(&g).is_err());
    assert_eq!(indpoly(&g), Poly::one_plus_x().pow(26));
    assert!(indpoly_clique(&Graph::empty(3).unwrap(), &[0, 1]).is_err());
}

#[test]
fn cache_survives_reload() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("polys.tsv");
    let cache = PolyCache::with_file(&path);
    let gs: Vec<Graph> = trees(8).unwrap();
    let polys: Vec<Poly> = gs.iter().map(|g| indpoly_with(g, &cache)).collect();
    assert!(!cache.is_empty());
    drop(cache);
    let again = PolyCache::with_file(&path);
    let loaded = again.load().unwrap();
    assert!(loaded > 0);
    let before = again.stats().misses;
    for (g, p) in gs.iter().zip(&polys) {
        assert_eq!(&indpoly_with(g, &again), p);
    }
    assert!(again.stats().hits > 0);
    assert_eq!(again.stats().misses, before);
    let kept = again.compact().unwrap();
    assert_eq!(kept, again.len());
    assert_eq!(PolyCache::with_file(&path).load().unwrap(), kept);
}
