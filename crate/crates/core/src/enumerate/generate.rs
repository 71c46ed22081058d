//! Isomorph-free generation of small graph classes.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::families::{build_s3_s5, build_s4, corona, cycle};
use crate::graph::{bits, canonical_key, full_mask, CanonicalKey, Graph};

pub const TREE_LIMIT: usize = 14;
pub const UNICYCLIC_LIMIT: usize = 12;
pub const CONNECTED_LIMIT: usize = 8;
pub const GIRTH_LIMIT: usize = 14;

fn range(what: &'static str, lo: usize, hi: usize, n: usize) -> Result<()> {
    if n < lo {
        return Err(Error::Precondition(format!(
            "{what} needs n ≥ {lo}, got {n}"
        )));
    }
    crate::error::budget(what, hi, n)
}

/// Keeps the first graph of each isomorphism class, in arrival order.
#[derive(Default)]
struct Dedup {
    seen: HashSet<CanonicalKey>,
    out: Vec<Graph>,
}

impl Dedup {
    fn push(&mut self, g: Graph) {
        if self.seen.insert(canonical_key(&g)) {
            self.out.push(g);
        }
    }
}

/// Every free tree of order `n` once, from level sequences of centre-rooted
/// trees (Wright–Richmond–Odlyzko–McKay).
pub fn trees(n: usize) -> Result<Vec<Graph>> {
    range("trees", 1, TREE_LIMIT, n)?;
    if n == 1 {
        return Ok(vec![Graph::empty(1)?]);
    }
    let mut out = Vec::new();
    let mut layout: Option<Vec<usize>> = Some((0..n / 2 + 1).chain(1..n.div_ceil(2)).collect());
    while let Some(l) = layout {
        let candidate = next_tree(l);
        out.push(layout_to_graph(&candidate)?);
        layout = next_rooted_tree(&candidate, None);
    }
    Ok(out)
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let mut result = pred.to_vec();
    for i in p..result.len() {
        result[i] = result[i - p + q];
    }
    Some(result)
}

fn split_tree(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout
        .iter()
        .enumerate()
        .filter(|(_, &l)| l == 1)
        .nth(1)
        .map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|l| l - 1).collect();
    let rest = std::iter::once(0)
        .chain(layout[m..].iter().copied())
        .collect();
    (left, rest)
}

fn next_tree(candidate: Vec<usize>) -> Vec<usize> {
    let (left, rest) = split_tree(&candidate);
    let lh = left.iter().max().copied().unwrap_or(0);
    let rh = rest.iter().max().copied().unwrap_or(0);
    let mut valid = rh >= lh;
    if valid && rh == lh && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return candidate;
    }
    let p = left.len();
    let mut new = next_rooted_tree(&candidate, Some(p)).expect("a later rooted tree exists");
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&new);
        let h = new_left.iter().max().copied().unwrap_or(0);
        let len = new.len();
        for (i, v) in (1..h + 2).enumerate() {
            new[len - (h + 1) + i] = v;
        }
    }
    new
}

fn layout_to_graph(layout: &[usize]) -> Result<Graph> {
    let mut edges = Vec::with_capacity(layout.len());
    let mut stack: Vec<usize> = Vec::new();
    for (i, &level) in layout.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if layout[j] >= level {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&j) = stack.last() {
            edges.push((j, i));
        }
        stack.push(i);
    }
    Graph::from_edges(layout.len(), &edges)
}

/// Every connected unicyclic graph of order `n` once: each tree plus each
/// non-edge, deduplicated.
pub fn connected_unicyclic(n: usize) -> Result<Vec<Graph>> {
    range("connected_unicyclic", 3, UNICYCLIC_LIMIT, n)?;
    let mut d = Dedup::default();
    for t in trees(n)? {
        for (u, v) in t.non_edges() {
            d.push(t.add_edge(u, v)?);
        }
    }
    Ok(d.out)
}

/// Every connected graph of order `n` once, grown one vertex at a time:
/// each connected graph arises from a smaller one by adding a vertex
/// joined to a nonempty set (remove any non-cut vertex).
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    range("connected_graphs", 1, CONNECTED_LIMIT, n)?;
    grow(n, |_, _| true)
}

/// Connected graphs of order `n` and girth at least `girth` (`girth ≥ 3`).
pub fn connected_graphs_with_girth(n: usize, girth: usize) -> Result<Vec<Graph>> {
    range("connected_graphs_with_girth", 1, GIRTH_LIMIT, n)?;
    if girth < 3 {
        return Err(Error::Precondition("girth bound must be at least 3".into()));
    }
    if girth <= 3 {
        return connected_graphs(n);
    }
    // a new vertex on a and b closes a cycle of length d(a, b) + 2
    grow(n, move |g, set| {
        let vs: Vec<usize> = bits(set).collect();
        vs.iter().enumerate().all(|(i, &a)| {
            let dist = g.distances_from(a);
            vs[i + 1..]
                .iter()
                .all(|&b| dist[b].is_none_or(|d| d + 2 >= girth))
        })
    })
}

fn grow(n: usize, admissible: impl Fn(&Graph, u64) -> bool) -> Result<Vec<Graph>> {
    let mut level = vec![Graph::empty(1)?];
    for m in 1..n {
        let mut d = Dedup::default();
        for g in &level {
            let rows = g.rows();
            for set in 1..=full_mask(m) {
                if !admissible(g, set) {
                    continue;
                }
                let mut adj = rows.to_vec();
                for v in bits(set) {
                    adj[v] |= 1 << m;
                }
                adj.push(set);
                d.push(Graph::from_rows(adj));
            }
        }
        level = d.out;
    }
    Ok(level)
}

/// Rooted trees on `k` vertices, each as `(tree, root)`, up to rooted
/// isomorphism.
pub fn rooted_trees(k: usize) -> Result<Vec<(Graph, usize)>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for t in trees(k)? {
        for r in 0..k {
            // a triangle hung from the root marks it
            let mut e = t.edges();
            e.extend([(r, k), (k, k + 1), (k + 1, k + 2), (k, k + 2)]);
            let marked = Graph::from_edges(k + 3, &e)?;
            if seen.insert(canonical_key(&marked)) {
                out.push((t.clone(), r));
            }
        }
    }
    Ok(out)
}

/// The branch list for one cycle vertex carrying `F*`, where `F` is the
/// rooted tree minus its root and each component attaches at the root's
/// neighbour.
fn branch_of(rooted: &(Graph, usize)) -> Result<Vec<(Graph, usize)>> {
    let (t, r) = rooted;
    let rest = t.delete_vertices(&[*r])?;
    let old: Vec<usize> = (0..t.order()).filter(|v| v != r).collect();
    let mut out = Vec::new();
    for comp in rest.component_masks() {
        let members: Vec<usize> = bits(comp).collect();
        let attach = members
            .iter()
            .position(|&i| t.has_edge(*r, old[i]))
            .expect("every component meets the root");
        out.push((rest.induced(comp), attach));
    }
    Ok(out)
}

/// Members of order `n` of `{C_3, C_4, C_5, C_7}`, the two families with
/// well-covered branches on a 3- or 5-cycle, the `(T ∪ K_2) + au + bv`
/// family and the coronas of unicyclic graphs, deduplicated.
pub fn well_covered_unicyclic_constructed(n: usize) -> Result<Vec<Graph>> {
    range("well_covered_unicyclic_constructed", 3, UNICYCLIC_LIMIT, n)?;
    let mut d = Dedup::default();
    if [3, 4, 5, 7].contains(&n) {
        d.push(cycle(n)?);
    }
    if n % 2 == 1 {
        for (g, second) in [(3usize, 1usize), (5, 2)] {
            if n < g + 2 {
                continue;
            }
            let total = (n - g) / 2;
            for k1 in 1..=total {
                let k2 = total - k1;
                for r1 in rooted_trees(k1 + 1)? {
                    let b1 = branch_of(&r1)?;
                    let seconds = if k2 == 0 {
                        vec![Vec::new()]
                    } else {
                        rooted_trees(k2 + 1)?
                            .iter()
                            .map(branch_of)
                            .collect::<Result<_>>()?
                    };
                    for b2 in seconds {
                        let mut branches = vec![Vec::new(); g];
                        branches[0] = b1.clone();
                        branches[second] = b2;
                        d.push(build_s3_s5(g, &branches)?);
                    }
                }
            }
        }
    } else {
        if n >= 6 {
            for t in trees((n - 2) / 2)? {
                let star = corona(&t)?;
                for (u, v) in t.edges() {
                    d.push(build_s4(&star, u, v)?);
                }
            }
            for u in connected_unicyclic(n / 2)? {
                d.push(corona(&u)?);
            }
        }
    }
    Ok(d.out)
}
