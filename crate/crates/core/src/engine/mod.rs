//! `I(G, x)` three ways: the memoized deletion recurrence, the
//! clique-deletion identity, and raw subset enumeration.

mod cache;

use num_bigint::BigInt;

use crate::error::{budget, Error, Result};
use crate::graph::{bits, canonical_key, Graph};
use crate::poly::Poly;

pub use cache::{global_cache, init_global_cache, CacheStats, PolyCache};

/// Order limit of [`indpoly_bruteforce`].
pub const BRUTEFORCE_LIMIT: usize = 25;

/// `I(G, x)` through the process-wide cache.
pub fn indpoly(g: &Graph) -> Poly {
    indpoly_with(g, global_cache())
}

/// `I(G, x)` via `I(G) = I(G−v) + x·I(G−N[v])` on a maximum-degree pivot,
/// multiplying over components and short-circuiting recognised families.
pub fn indpoly_with(g: &Graph, cache: &PolyCache) -> Poly {
    Recurrence { g, cache }.of_mask(g.vertex_mask())
}

struct Recurrence<'a> {
    g: &'a Graph,
    cache: &'a PolyCache,
}

impl Recurrence<'_> {
    fn of_mask(&self, mask: u64) -> Poly {
        let mut acc = Poly::one();
        for comp in components_within(self.g, mask) {
            acc = &acc * &self.component(comp);
        }
        acc
    }

    fn component(&self, comp: u64) -> Poly {
        if let Some(p) = closed_form(self.g, comp) {
            return p;
        }
        let key = canonical_key(&self.g.induced(comp));
        if let Some(p) = self.cache.get(&key) {
            return p;
        }
        let pivot = bits(comp)
            .max_by_key(|&v| ((self.g.row(v) & comp).count_ones(), std::cmp::Reverse(v)))
            .expect("component is nonempty");
        let without = self.of_mask(comp & !(1 << pivot));
        let closed = self.of_mask(comp & !self.g.closed_mask(pivot));
        let p = &without + &closed.shift(1);
        self.cache.insert(key, p.clone());
        p
    }
}

fn components_within(g: &Graph, mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= g.row(v);
            }
            next &= mask;
            frontier = next & !comp;
            comp |= next;
        }
        out.push(comp);
        rest &= !comp;
    }
    out
}

/// Closed forms for complete, complete bipartite, path and cycle components.
fn closed_form(g: &Graph, comp: u64) -> Option<Poly> {
    let m = comp.count_ones() as usize;
    let degs: Vec<u32> = bits(comp).map(|v| (g.row(v) & comp).count_ones()).collect();
    let edges = degs.iter().sum::<u32>() as usize / 2;
    if edges == m * (m - 1) / 2 {
        return Some(Poly::from_i64s(&[1, m as i64]));
    }
    let max = *degs.iter().max().unwrap();
    if max <= 2 {
        return Some(if edges == m {
            cycle_poly(m)
        } else {
            path_poly(m)
        });
    }
    let (a, b) = bipartition_sizes(g, comp)?;
    if edges == a * b {
        return Some(complete_bipartite_poly(a, b));
    }
    None
}

fn bipartition_sizes(g: &Graph, comp: u64) -> Option<(usize, usize)> {
    // BFS layers alternate sides
    let mut side = [0u64; 2];
    let mut frontier = comp & comp.wrapping_neg();
    let mut seen = frontier;
    let mut parity = 0;
    while frontier != 0 {
        side[parity] |= frontier;
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= g.row(v) & comp;
        }
        frontier = next & !seen;
        seen |= frontier;
        parity ^= 1;
    }
    for s in side {
        if bits(s).any(|v| g.row(v) & s != 0) {
            return None;
        }
    }
    Some((side[0].count_ones() as usize, side[1].count_ones() as usize))
}

/// `I(P_m)` from `I(P_m) = I(P_{m−1}) + x·I(P_{m−2})`.
pub fn path_poly(m: usize) -> Poly {
    let (mut prev, mut cur) = (Poly::one(), Poly::one());
    for _ in 0..m {
        let next = &cur + &prev.shift(1);
        prev = cur;
        cur = next;
    }
    cur
}

/// `I(C_m) = I(P_{m−1}) + x·I(P_{m−3})` for `m ≥ 3`.
pub fn cycle_poly(m: usize) -> Poly {
    assert!(m >= 3, "cycles have at least three vertices");
    &path_poly(m - 1) + &path_poly(m - 3).shift(1)
}

/// `(1+x)^a + (1+x)^b − 1`
pub fn complete_bipartite_poly(a: usize, b: usize) -> Poly {
    let opx = Poly::one_plus_x();
    &(&opx.pow(a as u32) + &opx.pow(b as u32)) - &Poly::one()
}

/// `I(G) = I(G−C) + x·Σ_{v∈C} I(G−N[v])` for a clique `C`.
pub fn indpoly_clique(g: &Graph, clique: &[usize]) -> Result<Poly> {
    let mut mask = 0u64;
    for &v in clique {
        if v >= g.order() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: g.order(),
            });
        }
        mask |= 1 << v;
    }
    if !g.is_clique(clique) {
        return Err(Error::Precondition(format!(
            "vertices {clique:?} do not induce a complete subgraph"
        )));
    }
    let rec = Recurrence {
        g,
        cache: global_cache(),
    };
    let mut sum = Poly::zero();
    for v in bits(mask) {
        sum = &sum + &rec.of_mask(g.vertex_mask() & !g.closed_mask(v));
    }
    Ok(&rec.of_mask(g.vertex_mask() & !mask) + &sum.shift(1))
}

/// `I(G, x)` by testing every vertex subset for independence.
pub fn indpoly_bruteforce(g: &Graph) -> Result<Poly> {
    let n = g.order();
    budget("indpoly_bruteforce", BRUTEFORCE_LIMIT, n)?;
    let total = 1usize << n;
    // independent[S] bit, built from S minus its lowest vertex
    let mut independent = vec![0u64; total.div_ceil(64)];
    independent[0] = 1;
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    for s in 1..total {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        let ok = independent[rest >> 6] >> (rest & 63) & 1 == 1 && g.row(low) & rest as u64 == 0;
        if ok {
            independent[s >> 6] |= 1 << (s & 63);
            counts[s.count_ones() as usize] += 1;
        }
    }
    Ok(Poly::new(counts.into_iter().map(BigInt::from).collect()))
}

/// `α(G)`, the degree of `I(G, x)`.
pub fn independence_number(g: &Graph) -> usize {
    indpoly(g).degree().unwrap_or(0)
}

/// `α(G)` by branch and bound, independent of the polynomial machinery.
pub fn independence_number_search(g: &Graph) -> usize {
    fn go(g: &Graph, cand: u64, size: usize, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        if size + cand.count_ones() as usize <= *best {
            return;
        }
        let v = bits(cand)
            .max_by_key(|&v| (g.row(v) & cand).count_ones())
            .unwrap();
        if g.row(v) & cand == 0 {
            // isolated in what remains: always take it
            go(g, cand & !(1 << v), size + 1, best);
            return;
        }
        go(g, cand & !g.closed_mask(v), size + 1, best);
        go(g, cand & !(1 << v), size, best);
    }
    let mut best = 0;
    go(g, g.vertex_mask(), 0, &mut best);
    best
}
