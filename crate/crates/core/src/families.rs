//! Named graphs and the leaf-moving transforms.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, MAX_ORDER};
use crate::wellcovered::{is_well_covered_tree, pendant_edges_perfect_matching};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Star,
    Cycle,
    Complete,
    CompleteBipartite,
    DN,
    UN,
    MN,
    GGkl,
    G2n,
    T1,
    T2,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::Path,
        Family::Star,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::DN,
        Family::UN,
        Family::MN,
        Family::GGkl,
        Family::G2n,
        Family::T1,
        Family::T2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Star => "star",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::DN => "d_n",
            Family::UN => "u_n",
            Family::MN => "m_n",
            Family::GGkl => "g_gkl",
            Family::G2n => "g_2n",
            Family::T1 => "t1",
            Family::T2 => "t2",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::T1 | Family::T2 => 0,
            Family::CompleteBipartite => 2,
            Family::GGkl => 3,
            _ => 1,
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// A family name with its integer parameters, written `name:p1,p2,...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[usize]) -> FamilySpec {
        FamilySpec {
            family,
            params: params.to_vec(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.name())?;
        if !self.params.is_empty() {
            let p: Vec<String> = self.params.iter().map(ToString::to_string).collect();
            write!(f, ":{}", p.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<FamilySpec> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let family: Family = name.trim().parse()?;
        let params = if rest.trim().is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad parameter {p:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        Ok(FamilySpec { family, params })
    }
}

fn params_err(family: Family, constraint: impl Into<String>) -> Error {
    Error::Params {
        family: family.name().into(),
        constraint: constraint.into(),
    }
}

fn check_order(family: Family, n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(params_err(family, format!("order {n} exceeds {MAX_ORDER}")));
    }
    Ok(())
}

pub fn make(spec: &FamilySpec) -> Result<Graph> {
    let f = spec.family;
    if spec.params.len() != f.arity() {
        return Err(params_err(
            f,
            format!(
                "expects {} parameter(s), got {}",
                f.arity(),
                spec.params.len()
            ),
        ));
    }
    let p = &spec.params;
    let need = |ok: bool, what: &str| if ok { Ok(()) } else { Err(params_err(f, what)) };
    match f {
        Family::Path => {
            need(p[0] >= 1, "n ≥ 1")?;
            path(p[0])
        }
        Family::Star => {
            need(p[0] >= 1, "n ≥ 1")?;
            star(p[0])
        }
        Family::Cycle => {
            need(p[0] >= 3, "n ≥ 3")?;
            cycle(p[0])
        }
        Family::Complete => {
            need(p[0] >= 1, "n ≥ 1")?;
            complete(p[0])
        }
        Family::CompleteBipartite => {
            need(p[0] >= 1 && p[1] >= 1, "a ≥ 1 and b ≥ 1")?;
            complete_bipartite(p[0], p[1])
        }
        Family::DN => {
            need(p[0] >= 4, "n ≥ 4")?;
            d_n(p[0])
        }
        Family::UN => {
            need(p[0] >= 4, "n ≥ 4")?;
            u_n(p[0])
        }
        Family::MN => {
            need(p[0] >= 9 && p[0] % 2 == 1, "n odd and n ≥ 9")?;
            m_n(p[0])
        }
        Family::GGkl => {
            need(p[0] == 3 || p[0] == 5, "g ∈ {3, 5}")?;
            need(p[1] + p[2] > 0, "k + ℓ > 0")?;
            g_gkl(p[0], p[1], p[2])
        }
        Family::G2n => {
            need(p[0] >= 5, "n ≥ 5")?;
            g_2n(p[0])
        }
        Family::T1 => t1(),
        Family::T2 => t2(),
    }
}

fn build(family: Family, n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    check_order(family, n)?;
    Graph::from_edges(n, edges)
}

/// `P_n`: `0 – 1 – … – n−1`.
pub fn path(n: usize) -> Result<Graph> {
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(Family::Path, n, &e)
}

/// `S_n = K_{1,n−1}` centred at 0.
pub fn star(n: usize) -> Result<Graph> {
    let e: Vec<_> = (1..n).map(|i| (0, i)).collect();
    build(Family::Star, n, &e)
}

pub fn cycle(n: usize) -> Result<Graph> {
    let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    e.push((n - 1, 0));
    build(Family::Cycle, n, &e)
}

pub fn complete(n: usize) -> Result<Graph> {
    let e: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    build(Family::Complete, n, &e)
}

/// Parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let e: Vec<_> = (0..a)
        .flat_map(|i| (0..b).map(move |j| (i, a + j)))
        .collect();
    build(Family::CompleteBipartite, a + b, &e)
}

/// Triangle `0 1 2` with the path `2 – 3 – … – n−1`.
pub fn d_n(n: usize) -> Result<Graph> {
    let mut e = vec![(0, 1), (1, 2), (0, 2)];
    e.extend((3..n).map(|i| (i - 1, i)));
    build(Family::DN, n, &e)
}

/// Triangle `0 1 2` with leaves `3..n` on vertex 0.
pub fn u_n(n: usize) -> Result<Graph> {
    let mut e = vec![(0, 1), (1, 2), (0, 2)];
    e.extend((3..n).map(|i| (0, i)));
    build(Family::UN, n, &e)
}

/// Triangle `0 1 2` with `(n−3)/2` paths `2 – 3+2i – 4+2i`.
pub fn m_n(n: usize) -> Result<Graph> {
    let mut e = vec![(0, 1), (1, 2), (0, 2)];
    for i in 0..(n - 3) / 2 {
        e.push((2, 3 + 2 * i));
        e.push((3 + 2 * i, 4 + 2 * i));
    }
    build(Family::MN, n, &e)
}

/// Cycle `0..g` with `P_k*` hanging from vertex 0 and `P_ℓ*` from vertex 2,
/// each joined at an end of its spine.
pub fn g_gkl(g: usize, k: usize, l: usize) -> Result<Graph> {
    let n = g + 2 * (k + l);
    check_order(Family::GGkl, n)?;
    let mut e: Vec<_> = (1..g).map(|i| (i - 1, i)).collect();
    e.push((g - 1, 0));
    let mut base = g;
    for (anchor, len) in [(0, k), (2, l)] {
        if len == 0 {
            continue;
        }
        e.push((anchor, base));
        for i in 0..len {
            if i > 0 {
                e.push((base + i - 1, base + i));
            }
            e.push((base + i, base + len + i));
        }
        base += 2 * len;
    }
    Graph::from_edges(n, &e)
}

/// `G_10` on `v1..v5 = 0..4, x1 x2 = 5 6, y1 y2 = 7 8, z1 = 9`; each further
/// step adds `v_j = 10 + 2(j−6)` adjacent to `v_{j−1}` with pendant `v_j + 1`.
pub fn g_2n(n: usize) -> Result<Graph> {
    check_order(Family::G2n, 2 * n)?;
    let mut e = vec![
        (4, 5),
        (5, 6),
        (4, 3),
        (3, 2),
        (2, 9),
        (2, 1),
        (1, 0),
        (2, 7),
        (7, 8),
    ];
    let mut prev = 4;
    for j in 6..=n {
        let v = 10 + 2 * (j - 6);
        e.push((prev, v));
        e.push((v, v + 1));
        prev = v;
    }
    Graph::from_edges(2 * n, &e)
}

pub fn t1() -> Result<Graph> {
    Graph::from_edges(8, &[(0, 1), (0, 5), (1, 2), (1, 3), (1, 4), (5, 6), (5, 7)])
}

pub fn t2() -> Result<Graph> {
    Graph::from_edges(8, &[(0, 1), (0, 3), (0, 4), (0, 5), (1, 2), (4, 6), (5, 7)])
}

/// `G*`: vertex `n + i` is a new leaf on `i`.
pub fn corona(g: &Graph) -> Result<Graph> {
    let n = g.order();
    if 2 * n > MAX_ORDER {
        return Err(Error::Budget {
            what: "corona order",
            limit: MAX_ORDER,
            actual: 2 * n,
        });
    }
    let mut e = g.edges();
    e.extend((0..n).map(|i| (i, n + i)));
    Graph::from_edges(2 * n, &e)
}

fn pre(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn check_vertex(g: &Graph, v: usize, name: &str) -> Result<()> {
    if v >= g.order() {
        return Err(pre(format!("{name} = {v} is not a vertex")));
    }
    Ok(())
}

/// `G*_{u,v,w} = G − vw + uw`.
pub fn star_swap(g: &Graph, u: usize, v: usize, w: usize) -> Result<Graph> {
    for (x, name) in [(u, "u"), (v, "v"), (w, "w")] {
        check_vertex(g, x, name)?;
    }
    if g.degree(u) != 1 {
        return Err(pre(format!("u = {u} is not a leaf")));
    }
    // walk from u through degree-2 vertices
    let mut path = vec![u];
    let mut prev = u;
    let mut cur = g.neighbors(u).next().unwrap();
    while g.degree(cur) == 2 {
        path.push(cur);
        let next = g.neighbors(cur).find(|&x| x != prev).unwrap();
        prev = cur;
        cur = next;
    }
    if g.degree(cur) < 3 {
        return Err(pre(format!(
            "no vertex of degree ≥ 3 is reachable from u = {u}"
        )));
    }
    if cur != v {
        return Err(pre(format!(
            "v = {v} is not the nearest vertex of degree ≥ 3 to u (that is {cur})"
        )));
    }
    if w == u {
        return Err(pre("w must differ from u"));
    }
    if !g.has_edge(v, w) {
        return Err(pre(format!("w = {w} is not adjacent to v = {v}")));
    }
    if path.contains(&w) {
        return Err(pre(format!("w = {w} lies on the u–v path")));
    }
    g.delete_edge(v, w)?.add_edge(u, w)
}

/// The well-covered branch induced by `x`: `x` together with every tree
/// hanging from `x` by a single edge that keeps `G[S]` plus a new leaf at
/// `x` a well-covered tree.
pub fn well_covered_branch(g: &Graph, x: usize) -> Result<Vec<usize>> {
    check_vertex(g, x, "x")?;
    let rest = g.delete_vertices(&[x])?;
    let old: Vec<usize> = (0..g.order()).filter(|&v| v != x).collect();
    let mut s = 1u64 << x;
    for comp in rest.component_masks() {
        let members: u64 = bits(comp).fold(0, |m, i| m | 1 << old[i]);
        let links = (g.row(x) & members).count_ones();
        let sub = rest.induced(comp);
        if links != 1 || !sub.is_tree() {
            continue;
        }
        // x plus a new leaf plus this component must be a well-covered tree
        let with = g.induced(members | 1 << x);
        let n = with.order();
        let xi = bits(members | 1 << x).position(|v| v == x).unwrap();
        let mut e = with.edges();
        e.push((xi, n));
        let t = Graph::from_edges(n + 1, &e)?;
        if pendant_edges_perfect_matching(&t) {
            s |= members;
        }
    }
    if s == 1 << x {
        return Err(pre(format!("x = {x} induces no well-covered branch")));
    }
    if g.row(x) & !s == 0 {
        return Err(pre(format!("x = {x} has no neighbour outside its branch")));
    }
    Ok(bits(s).collect())
}

/// `G†_{u,v,w} = G − vw + uw` inside the well-covered branch induced by `x`.
pub fn dagger_swap(g: &Graph, x: usize, u: usize, v: usize, w: usize) -> Result<Graph> {
    for (y, name) in [(u, "u"), (v, "v"), (w, "w")] {
        check_vertex(g, y, name)?;
    }
    let s_list = well_covered_branch(g, x)?;
    let s: u64 = s_list.iter().fold(0, |m, &y| m | 1 << y);
    let deg2 = s_list
        .iter()
        .filter(|&&y| y != x && g.degree(y) == 2)
        .count();
    if deg2 < 2 {
        return Err(pre(format!(
            "the branch at x = {x} has {deg2} vertices of degree 2, needs at least 2"
        )));
    }
    if s >> u & 1 == 0 || u == x {
        return Err(pre(format!("u = {u} is not in the branch minus x")));
    }
    if g.degree(u) != 2 {
        return Err(pre(format!("u = {u} does not have degree 2")));
    }
    let branch = g.induced(s);
    let pos = |y: usize| s_list.iter().position(|&z| z == y);
    let dist = branch.distances_from(pos(u).unwrap());
    let deg_s = |y: usize| (g.row(y) & s).count_ones();
    let dist_x = dist[pos(x).unwrap()].unwrap();
    let best = s_list
        .iter()
        .filter(|&&y| deg_s(y) >= 4)
        .filter_map(|&y| dist[pos(y).unwrap()].map(|d| (d, y)))
        .min_by_key(|&(d, _)| d);
    let allowed: Vec<usize> = match best {
        Some((d, _)) if d <= dist_x => s_list
            .iter()
            .copied()
            .filter(|&y| deg_s(y) >= 4 && dist[pos(y).unwrap()] == Some(d))
            .collect(),
        _ => vec![x],
    };
    if !allowed.contains(&v) {
        return Err(pre(format!(
            "v = {v} is not a valid pivot; expected one of {allowed:?}"
        )));
    }
    if s >> w & 1 == 0 || !g.has_edge(v, w) {
        return Err(pre(format!(
            "w = {w} is not a neighbour of v in the branch"
        )));
    }
    if g.degree(w) < 2 {
        return Err(pre(format!("w = {w} is a leaf")));
    }
    let u_to_x = branch
        .shortest_path(pos(u).unwrap(), pos(x).unwrap())
        .expect("branch is connected");
    if u_to_x.iter().any(|&i| s_list[i] == w) {
        return Err(pre(format!("w = {w} lies on the u–x path")));
    }
    g.delete_edge(v, w)?.add_edge(u, w)
}

/// `(T ∪ K_2) + au + bv` with `a = |T|`, `b = |T| + 1`.
pub fn build_s4(t: &Graph, u: usize, v: usize) -> Result<Graph> {
    if !is_well_covered_tree(t) {
        return Err(pre("T is not a well-covered tree"));
    }
    if u >= t.order() || v >= t.order() || !t.has_edge(u, v) {
        return Err(pre(format!("{u}{v} is not an edge of T")));
    }
    if t.degree(u) == 1 || t.degree(v) == 1 {
        return Err(pre(format!("{u}{v} is a pendant edge")));
    }
    let n = t.order();
    check_order(Family::Cycle, n + 2)?;
    let mut e = t.edges();
    e.extend([(n, n + 1), (n, u), (n + 1, v)]);
    Graph::from_edges(n + 2, &e)
}

/// A cycle `C_g`, `g ∈ {3, 5}`, where cycle vertex `i` is joined to the
/// chosen vertex of `T*` for every `(T, r)` in `branches[i]`.
pub fn build_s3_s5(g: usize, branches: &[Vec<(Graph, usize)>]) -> Result<Graph> {
    if g != 3 && g != 5 {
        return Err(pre(format!("cycle length {g} is not 3 or 5")));
    }
    if branches.len() != g {
        return Err(pre(format!(
            "need one branch list per cycle vertex, got {}",
            branches.len()
        )));
    }
    let carriers: Vec<usize> = (0..g).filter(|&i| !branches[i].is_empty()).collect();
    if carriers.is_empty() || carriers.len() > 2 {
        return Err(pre(format!(
            "exactly 1 or 2 cycle vertices must carry branches, got {}",
            carriers.len()
        )));
    }
    if g == 5 && carriers.len() == 2 {
        let d = carriers[1] - carriers[0];
        if d == 1 || d == 4 {
            return Err(pre(
                "the two branch vertices of a 5-cycle must be nonadjacent",
            ));
        }
    }
    let total = g + branches
        .iter()
        .flatten()
        .map(|(t, _)| 2 * t.order())
        .sum::<usize>();
    check_order(Family::Cycle, total)?;
    let mut e: Vec<_> = (1..g).map(|i| (i - 1, i)).collect();
    e.push((g - 1, 0));
    let mut base = g;
    for &c in &carriers {
        for (t, r) in &branches[c] {
            if !t.is_tree() {
                return Err(pre("branch graphs must be trees"));
            }
            if *r >= t.order() {
                return Err(pre(format!("attachment {r} is a leaf of T*")));
            }
            let star = corona(t)?;
            e.extend(star.edges().into_iter().map(|(a, b)| (base + a, base + b)));
            e.push((c, base + r));
            base += star.order();
        }
    }
    let out = Graph::from_edges(total, &e)?;
    for &c in &carriers {
        check_branch(&out, c, g)?;
    }
    Ok(out)
}

/// The trees hanging from cycle vertex `c`, plus `c` and a new leaf on `c`,
/// must have a perfect matching of pendant edges.
fn check_branch(out: &Graph, c: usize, g: usize) -> Result<()> {
    let mut members = 1u64 << c;
    let cycle_mask = (1u64 << g) - 1;
    let rest = out.vertex_mask() & !cycle_mask;
    let mut frontier = out.row(c) & rest;
    while frontier != 0 {
        members |= frontier;
        let mut next = 0;
        for y in bits(frontier) {
            next |= out.row(y) & rest;
        }
        frontier = next & !members;
    }
    let sub = out.induced(members);
    let n = sub.order();
    let ci = bits(members).position(|y| y == c).unwrap();
    let mut e = sub.edges();
    e.push((ci, n));
    if !pendant_edges_perfect_matching(&Graph::from_edges(n + 1, &e)?) {
        return Err(pre(format!(
            "cycle vertex {c} does not induce a well-covered branch"
        )));
    }
    Ok(())
}
