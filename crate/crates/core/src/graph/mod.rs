//! Finite simple undirected graphs on at most [`MAX_ORDER`] vertices.
//!
//! Vertices are the indices `0..n`. Adjacency is stored as one bitmask row
//! per vertex, which keeps neighbourhood surgery (`G - S`, `N[v]`, `N[e]`)
//! down to a handful of word operations.

mod canon;
mod embed;
mod graph6;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub use canon::{canonical_key, canonical_labeling, CanonicalKey};
pub use embed::{subgraph_embedding_exists, EMBEDDING_LIMIT};
pub use graph6::{parse_graph6, parse_graph6_lines, render_graph6};

/// Largest order a [`Graph`] can have.
pub const MAX_ORDER: usize = 64;

/// Iterate the set bits of a mask, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Girth of a graph; forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        crate::error::budget("Graph", MAX_ORDER, n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::EdgeExists(u.min(v), u.max(v)));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Build from adjacency rows. Rows must be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Graph {
        debug_assert!(adj.len() <= MAX_ORDER);
        Graph { n: adj.len(), adj }
    }

    pub(crate) fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub(crate) fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub(crate) fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Degree sequence in nondecreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        Ok(bits(self.closed_mask(v)).collect())
    }

    pub(crate) fn closed_mask(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    /// `N[e] = N[u] ∪ N[v]` for the edge `e = uv`.
    pub fn closed_neighborhood_edge(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(bits(self.closed_mask(u) | self.closed_mask(v)).collect())
    }

    /// `G - S`; survivors keep their relative order.
    pub fn delete_vertices(&self, s: &[usize]) -> Result<Graph> {
        let mut mask = 0u64;
        for &v in s {
            self.check_vertex(v)?;
            mask |= 1 << v;
        }
        Ok(self.induced(self.vertex_mask() & !mask))
    }

    /// Subgraph induced by the vertices in `keep`, reindexed in increasing order.
    pub(crate) fn induced(&self, keep: u64) -> Graph {
        let keep = keep & self.vertex_mask();
        if keep == self.vertex_mask() {
            return self.clone();
        }
        let verts: Vec<usize> = bits(keep).collect();
        let mut pos = [0u8; MAX_ORDER];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i as u8;
        }
        let adj = verts
            .iter()
            .map(|&v| bits(self.adj[v] & keep).fold(0u64, |m, w| m | 1 << pos[w]))
            .collect();
        Graph::from_rows(adj)
    }

    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut mask = 0u64;
        for &v in vertices {
            self.check_vertex(v)?;
            mask |= 1 << v;
        }
        Ok(self.induced(mask))
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        crate::error::budget("Graph", MAX_ORDER, n)?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph::from_rows(adj))
    }

    /// `G + uv`. Fails if `uv` is already an edge.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::EdgeExists(u, v));
        }
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    /// `G - uv`. Fails if `uv` is not an edge.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub(crate) fn component_masks(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = self.vertex_mask();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    pub fn components(&self) -> Vec<Graph> {
        self.component_masks()
            .into_iter()
            .map(|m| self.induced(m))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_masks().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.size() + self.component_masks().len() == self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.is_connected() && self.size() == self.n - 1
    }

    /// Connected with exactly one cycle.
    pub fn is_unicyclic(&self) -> bool {
        self.n >= 3 && self.is_connected() && self.size() == self.n
    }

    /// BFS distances from `v`; `None` for unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// A shortest path from `a` to `b`, inclusive of both ends.
    pub fn shortest_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let mut parent = vec![usize::MAX; self.n];
        parent[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            if u == b {
                let mut path = vec![b];
                let mut cur = b;
                while cur != a {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.neighbors(u) {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    pub fn girth(&self) -> Girth {
        // Shortest cycle through each root: the first non-tree edge met by BFS
        // closes a cycle of length d(x) + d(y) + 1 and the minimum over roots
        // is exact.
        let mut best = usize::MAX;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn has_triangle(&self) -> bool {
        self.edges()
            .into_iter()
            .any(|(u, v)| self.adj[u] & self.adj[v] != 0)
    }

    /// Apply a relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition(format!(
                "permutation has length {} but graph has order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= 1 << p;
        }
        if seen != self.vertex_mask() {
            return Err(Error::Precondition("not a permutation".into()));
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.link(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Complement graph.
    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        Graph::from_rows(
            (0..self.n)
                .map(|v| full & !self.adj[v] & !(1 << v))
                .collect(),
        )
    }

    /// Nonadjacent vertex pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Whether every vertex set in `verts` is pairwise adjacent.
    pub fn is_clique(&self, verts: &[usize]) -> bool {
        verts.iter().enumerate().all(|(i, &u)| {
            verts[i + 1..]
                .iter()
                .all(|&v| u != v && self.has_edge(u, v))
        })
    }
}
