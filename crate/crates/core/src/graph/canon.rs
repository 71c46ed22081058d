//! Exact canonical forms by individualization-refinement.
//!
//! Every ordered partition is refined to an equitable one by splitting cells
//! on neighbour counts. The search tree individualizes vertices of the first
//! non-singleton cell; each leaf yields a labeling, and the canonical form is
//! the relabeled graph with the greatest adjacency certificate. Automorphisms
//! discovered at leaves prune sibling subtrees: a child is skipped when an
//! automorphism fixing the current prefix maps it onto an explored child.

use std::fmt;

use base64::engine::general_purpose::STANDARD;
use base64::Engine as _;
use serde::{Deserialize, Serialize};

use super::{bits, render_graph6, Graph};

/// Canonical graph6 encoding of an isomorphism class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalKey(String);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// The canonical representative as a graph6 string.
    pub fn graph6(&self) -> &str {
        &self.0
    }

    pub fn to_base64(&self) -> String {
        STANDARD.encode(self.0.as_bytes())
    }

    pub fn from_base64(s: &str) -> Option<CanonicalKey> {
        let bytes = STANDARD.decode(s.trim()).ok()?;
        let text = String::from_utf8(bytes).ok()?;
        // only accept keys that decode to a graph
        super::parse_graph6(&text).ok()?;
        Some(CanonicalKey(text))
    }

    pub fn graph(&self) -> Graph {
        super::parse_graph6(&self.0).expect("canonical keys are valid graph6")
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.0)
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    let perm = canonical_labeling(g);
    let relabeled = g.relabel(&perm).expect("labeling is a permutation");
    CanonicalKey(render_graph6(&relabeled))
}

/// A canonical labeling: vertex `v` maps to position `perm[v]`.
///
/// Two graphs are isomorphic iff relabeling each by its canonical labeling
/// produces identical graphs.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 1 {
        return (0..n).collect();
    }
    let mut search = Search {
        g,
        best: None,
        first: None,
        automorphisms: Vec::new(),
        path: Vec::new(),
        explored: Vec::new(),
    };
    let root = vec![(0..n).collect::<Vec<_>>()];
    search.node(root);
    let (_, lab) = search.best.expect("search reaches at least one leaf");
    lab
}

type Cells = Vec<Vec<usize>>;

/// Certificate of a leaf: the relabeled adjacency rows.
type Cert = Vec<u64>;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Cert, Vec<usize>)>,
    first: Option<(Cert, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
    /// Individualized vertices from the root to the current node.
    path: Vec<usize>,
    /// Children already explored at each depth of the current path.
    explored: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(d)` to abandon the search up to depth `d`.
    fn node(&mut self, cells: Cells) -> Option<usize> {
        let cells = refine(self.g, cells);
        let depth = self.path.len();
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells);
        };
        self.explored.push(Vec::new());
        let candidates = cells[target].clone();
        let mut abort = None;
        for &v in &candidates {
            if self.equivalent_to_explored(depth, v) {
                continue;
            }
            let mut child = cells.clone();
            let rest: Vec<usize> = candidates.iter().copied().filter(|&w| w != v).collect();
            child[target] = vec![v];
            child.insert(target + 1, rest);
            self.path.push(v);
            let r = self.node(child);
            self.path.pop();
            self.explored[depth].push(v);
            if let Some(d) = r {
                if d < depth {
                    abort = Some(d);
                    break;
                }
            }
        }
        self.explored.pop();
        abort
    }

    fn leaf(&mut self, cells: &Cells) -> Option<usize> {
        let n = self.g.order();
        let mut lab = vec![0; n];
        for (i, c) in cells.iter().enumerate() {
            lab[c[0]] = i;
        }
        let cert = certificate(self.g, &lab);
        let mut found = None;
        if let Some((fc, fl)) = &self.first {
            if *fc == cert {
                found = Some(compose_inverse(fl, &lab));
            }
        } else {
            self.first = Some((cert.clone(), lab.clone()));
        }
        match &self.best {
            Some((bc, bl)) if *bc == cert => {
                if found.is_none() {
                    found = Some(compose_inverse(bl, &lab));
                }
            }
            Some((bc, _)) if *bc > cert => {}
            _ => self.best = Some((cert, lab)),
        }
        let gamma = found?;
        if gamma.iter().enumerate().all(|(i, &x)| i == x) {
            return None;
        }
        self.automorphisms.push(gamma);
        // Find the shallowest ancestor whose current child became redundant.
        (0..self.path.len()).find(|&d| self.equivalent_to_explored(d, self.path[d]))
    }

    /// Whether `v` lies in the orbit of an explored child at `depth`, under
    /// the known automorphisms that fix the path prefix pointwise.
    fn equivalent_to_explored(&self, depth: usize, v: usize) -> bool {
        let explored = &self.explored[depth];
        if explored.is_empty() || self.automorphisms.is_empty() {
            return false;
        }
        let prefix = &self.path[..depth];
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&p| gamma[p] == p) {
                any = true;
                for (x, &y) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }
}

/// `γ = a⁻¹ ∘ b`: the automorphism sending a vertex labeled `i` by `b` to
/// the vertex labeled `i` by `a`.
fn compose_inverse(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut a_inv = vec![0; a.len()];
    for (v, &i) in a.iter().enumerate() {
        a_inv[i] = v;
    }
    b.iter().map(|&i| a_inv[i]).collect()
}

fn certificate(g: &Graph, lab: &[usize]) -> Cert {
    let mut rows = vec![0u64; g.order()];
    for (v, &lv) in lab.iter().enumerate() {
        rows[lv] = bits(g.row(v)).fold(0u64, |m, w| m | 1 << lab[w]);
    }
    rows
}

/// Refine to the coarsest equitable partition finer than `cells`.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    'restart: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].iter().fold(0u64, |m, &v| m | 1 << v);
            for c in 0..cells.len() {
                if cells[c].len() == 1 {
                    continue;
                }
                let counts: Vec<u32> = cells[c]
                    .iter()
                    .map(|&v| (g.row(v) & splitter).count_ones())
                    .collect();
                if counts.iter().all(|&k| k == counts[0]) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    counts.into_iter().zip(cells[c].iter().copied()).collect();
                keyed.sort_unstable();
                let mut groups: Cells = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        groups.push(Vec::new());
                        last = Some(k);
                    }
                    groups.last_mut().unwrap().push(v);
                }
                cells.splice(c..=c, groups);
                continue 'restart;
            }
        }
        return cells;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        if a.order() != b.order() || a.size() != b.size() {
            return false;
        }
        if a.degree_sequence() != b.degree_sequence() {
            return false;
        }
        let n = a.order();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if a.relabel(&perm).unwrap() == *b {
                return true;
            }
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
                return false;
            };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
    }

    #[test]
    fn relabeled_paths_share_a_key() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_key(&a), canonical_key(&b));
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_ne!(canonical_key(&a), canonical_key(&k3));
    }

    #[test]
    fn c6_and_two_triangles_differ() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let two_k3 =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!brute_isomorphic(&c6, &two_k3));
        assert_ne!(canonical_key(&c6), canonical_key(&two_k3));
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        // all labeled graphs on 5 vertices, compared pairwise within a sample
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        let graphs: Vec<Graph> = (0u32..1 << pairs.len())
            .step_by(7)
            .map(|m| {
                let e: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| m >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                Graph::from_edges(5, &e).unwrap()
            })
            .collect();
        let keys: Vec<_> = graphs.iter().map(canonical_key).collect();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                assert_eq!(
                    keys[i] == keys[j],
                    brute_isomorphic(&graphs[i], &graphs[j]),
                    "{:?} vs {:?}",
                    graphs[i],
                    graphs[j]
                );
            }
        }
    }

    #[test]
    fn highly_symmetric_graphs_terminate() {
        let star = Graph::from_edges(24, &(1..24).map(|i| (0, i)).collect::<Vec<_>>()).unwrap();
        let perm: Vec<usize> = (0..24).rev().collect();
        assert_eq!(
            canonical_key(&star),
            canonical_key(&star.relabel(&perm).unwrap())
        );
        let empty = Graph::empty(20).unwrap();
        assert_eq!(
            canonical_key(&empty),
            canonical_key(&empty.complement().complement())
        );
        let mut e = Vec::new();
        for u in 0..10 {
            for v in 10..20 {
                e.push((u, v));
            }
        }
        let k = Graph::from_edges(20, &e).unwrap();
        canonical_key(&k);
        canonical_key(&k.complement());
    }

    #[test]
    fn base64_round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let k = canonical_key(&g);
        assert_eq!(CanonicalKey::from_base64(&k.to_base64()), Some(k.clone()));
        assert!(brute_isomorphic(&k.graph(), &g));
        assert_eq!(CanonicalKey::from_base64("!!"), None);
    }
}
