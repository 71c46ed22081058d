use super::{bits, Graph};
use crate::error::{budget, Result};

/// Both graphs must have at most this many vertices.
pub const EMBEDDING_LIMIT: usize = 12;

/// Whether `h` is isomorphic to a (not necessarily induced) subgraph of `g`.
pub fn subgraph_embedding_exists(h: &Graph, g: &Graph) -> Result<bool> {
    budget(
        "subgraph_embedding_exists pattern",
        EMBEDDING_LIMIT,
        h.order(),
    )?;
    budget("subgraph_embedding_exists host", EMBEDDING_LIMIT, g.order())?;
    if h.order() > g.order() || h.size() > g.size() {
        return Ok(false);
    }
    // Place pattern vertices so each one after the first of its component
    // has an already-placed neighbour; this prunes early.
    let mut order = Vec::with_capacity(h.order());
    let mut placed = 0u64;
    while order.len() < h.order() {
        let next = (0..h.order())
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (h.row(v) & placed).count_ones(),
                    h.degree(v),
                    usize::MAX - v,
                )
            })
            .unwrap();
        order.push(next);
        placed |= 1 << next;
    }
    let mut image = vec![usize::MAX; h.order()];
    Ok(extend(h, g, &order, 0, &mut image, 0))
}

fn extend(h: &Graph, g: &Graph, order: &[usize], k: usize, image: &mut [usize], used: u64) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    let mut need = !0u64;
    for w in bits(h.row(v)) {
        if image[w] != usize::MAX {
            need &= g.row(image[w]);
        }
    }
    let candidates = need & g.vertex_mask() & !used;
    for c in bits(candidates) {
        if g.degree(c) < h.degree(v) {
            continue;
        }
        image[v] = c;
        if extend(h, g, order, k + 1, image, used | 1 << c) {
            return true;
        }
    }
    image[v] = usize::MAX;
    false
}
