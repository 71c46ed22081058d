use indroots::families::{corona, dagger_swap, star_swap};
use indroots::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

use super::prufer;

fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    if n == 1 {
        return Graph::empty(1).unwrap();
    }
    let seq: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.gen_range(0..n))
        .collect();
    prufer(n, &seq)
}

fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: f64) -> Graph {
    let mut g = random_tree(rng, n);
    for (u, v) in g.non_edges() {
        if rng.gen_bool(extra) {
            g = g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// A random graph with a leaf and a valid `(u, v, w)` for the star swap.
pub fn star_swap_instance<R: Rng>(rng: &mut R) -> (Graph, usize, usize, usize) {
    loop {
        let n = rng.gen_range(4..=10);
        let extra = if rng.gen_bool(0.5) { 0.0 } else { 0.15 };
        let g = random_connected(rng, n, extra);
        let mut triples = Vec::new();
        for u in g.leaves() {
            for v in 0..n {
                for w in g.neighbors(v).collect::<Vec<_>>() {
                    if star_swap(&g, u, v, w).is_ok() {
                        triples.push((u, v, w));
                    }
                }
            }
        }
        if let Some(&(u, v, w)) = triples.choose(rng) {
            return (g, u, v, w);
        }
    }
}

/// A graph where `x` induces a well-covered branch with at least two
/// degree-2 vertices, with a valid `(u, v, w)` for the dagger swap.
pub fn dagger_instance<R: Rng>(rng: &mut R) -> (Graph, usize, usize, usize, usize) {
    loop {
        // branch: T'* without the pendant of x = 0
        let k = rng.gen_range(3..=7);
        let t = random_tree(rng, k);
        let star = corona(&t).unwrap();
        let branch = star.delete_vertices(&[k]).unwrap();
        // the rest: a random connected graph joined to x by one edge
        let m = rng.gen_range(1..=5);
        let rest = random_connected(rng, m, 0.3);
        let joined = branch.disjoint_union(&rest).unwrap();
        let anchor = branch.order() + rng.gen_range(0..m);
        let g = joined.add_edge(0, anchor).unwrap();
        let x = 0;
        let mut quads = Vec::new();
        for u in 0..branch.order() {
            for v in 0..branch.order() {
                for w in g.neighbors(v).collect::<Vec<_>>() {
                    if dagger_swap(&g, x, u, v, w).is_ok() {
                        quads.push((x, u, v, w));
                    }
                }
            }
        }
        if let Some(&(x, u, v, w)) = quads.choose(rng) {
            return (g, x, u, v, w);
        }
    }
}
