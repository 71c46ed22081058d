#![allow(dead_code)]

pub mod instances;

use indroots::Graph;
use proptest::prelude::*;

/// Any graph on `1..=max_n` vertices.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut e = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        e.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &e).unwrap()
        })
    })
}

/// A tree on `2..=max_n` vertices from a Prüfer sequence.
pub fn arb_tree(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0..n, n - 2).prop_map(move |seq| prufer(n, &seq))
    })
}

pub fn prufer(n: usize, seq: &[usize]) -> Graph {
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut e = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        e.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    e.push((rest[0], rest[1]));
    Graph::from_edges(n, &e).unwrap()
}

/// Isomorphism by trying every permutation.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.order();
    if n != b.order() || a.size() != b.size() {
        return false;
    }
    let mut da = a.degree_sequence();
    let mut db = b.degree_sequence();
    da.sort();
    db.sort();
    if da != db {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    fn go(a: &Graph, b: &Graph, i: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = a.order();
        if i == n {
            return true;
        }
        for c in 0..n {
            if used[c] || a.degree(i) != b.degree(c) {
                continue;
            }
            if (0..i).all(|j| a.has_edge(i, j) == b.has_edge(c, perm[j])) {
                used[c] = true;
                perm[i] = c;
                if go(a, b, i + 1, perm, used) {
                    return true;
                }
                used[c] = false;
            }
        }
        false
    }
    go(a, b, 0, &mut perm, &mut used)
}

/// Naive connected-graph classes of order `n`: every labelled edge set,
/// deduplicated pairwise by permutation search.
pub fn naive_classes(n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut reps: Vec<Graph> = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let e: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = Graph::from_edges(n, &e).unwrap();
        if !g.is_connected() || !keep(&g) {
            continue;
        }
        if !reps.iter().any(|r| isomorphic(r, &g)) {
            reps.push(g);
        }
    }
    reps
}
