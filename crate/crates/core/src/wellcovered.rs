//! Maximal independent sets and the well-covered criteria built on them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{budget, Result};
use crate::graph::{bits, Graph};

/// Order limit of the maximal-set enumeration.
pub const ENUMERATION_LIMIT: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalSetReport {
    /// Number of maximal independent sets of each size.
    pub sizes: BTreeMap<usize, u64>,
    pub min_witness: Vec<usize>,
    pub max_witness: Vec<usize>,
    pub well_covered: bool,
    pub very_well_covered: bool,
}

impl MaximalSetReport {
    pub fn count(&self) -> u64 {
        self.sizes.values().sum()
    }

    pub fn min_size(&self) -> usize {
        *self.sizes.keys().next().unwrap()
    }

    pub fn max_size(&self) -> usize {
        *self.sizes.keys().next_back().unwrap()
    }
}

/// Enumerate every maximal independent set by pivoted Bron–Kerbosch on the
/// complement.
pub fn maximal_independent_sets(g: &Graph) -> Result<MaximalSetReport> {
    budget("maximal_independent_sets", ENUMERATION_LIMIT, g.order())?;
    let mut sizes = BTreeMap::new();
    let mut min_w: Option<u64> = None;
    let mut max_w: Option<u64> = None;
    let mut visit = |r: u64| {
        let k = r.count_ones();
        *sizes.entry(k as usize).or_insert(0u64) += 1;
        if min_w.is_none_or(|m| k < m.count_ones()) {
            min_w = Some(r);
        }
        if max_w.is_none_or(|m| k > m.count_ones()) {
            max_w = Some(r);
        }
    };
    expand(g, 0, g.vertex_mask(), 0, &mut visit);
    let n = g.order();
    let well_covered = sizes.len() == 1;
    let very_well_covered = well_covered && n.is_multiple_of(2) && sizes.contains_key(&(n / 2));
    Ok(MaximalSetReport {
        sizes,
        min_witness: bits(min_w.unwrap()).collect(),
        max_witness: bits(max_w.unwrap()).collect(),
        well_covered,
        very_well_covered,
    })
}

fn expand(g: &Graph, r: u64, mut p: u64, mut x: u64, visit: &mut impl FnMut(u64)) {
    if p == 0 {
        if x == 0 {
            visit(r);
        }
        return;
    }
    let pivot = bits(p | x)
        .min_by_key(|&u| (p & g.closed_mask(u)).count_ones())
        .unwrap();
    for v in bits(p & g.closed_mask(pivot)) {
        let keep = !g.closed_mask(v);
        expand(g, r | 1 << v, p & keep, x & keep, visit);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

pub fn is_well_covered(g: &Graph) -> Result<bool> {
    Ok(maximal_independent_sets(g)?.well_covered)
}

/// All maximal independent sets have size `n/2`.
pub fn is_very_well_covered(g: &Graph) -> Result<bool> {
    Ok(maximal_independent_sets(g)?.very_well_covered)
}

/// Whether the edges incident with a leaf cover every vertex exactly once.
pub fn pendant_edges_perfect_matching(g: &Graph) -> bool {
    let mut covered = 0u64;
    for (u, v) in g.edges() {
        if g.degree(u) == 1 || g.degree(v) == 1 {
            let e = 1u64 << u | 1u64 << v;
            if covered & e != 0 {
                return false;
            }
            covered |= e;
        }
    }
    covered == g.vertex_mask()
}

/// Whether `T` is a well-covered tree: `K_1`, or a tree whose pendant edges
/// form a perfect matching.
pub fn is_well_covered_tree(t: &Graph) -> bool {
    t.is_tree() && (t.order() == 1 || pendant_edges_perfect_matching(t))
}
