//! Exhaustive generation and the extremal surveys run over it.

mod generate;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::engine::indpoly;
use crate::error::{Error, Result};
use crate::families::{complete_bipartite, corona, cycle, d_n, g_gkl, m_n, path, star, u_n};
use crate::graph::{canonical_key, render_graph6, CanonicalKey, Graph};
use crate::order::{relate, Profile, Relation};
use crate::poly::Poly;
use crate::wellcovered::maximal_independent_sets;

pub use generate::{
    connected_graphs, connected_graphs_with_girth, connected_unicyclic, rooted_trees, trees,
    well_covered_unicyclic_constructed, CONNECTED_LIMIT, GIRTH_LIMIT, TREE_LIMIT, UNICYCLIC_LIMIT,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SurveyClass {
    Trees,
    Unicyclic,
    WcTrees,
    WcUnicyclicEven,
    WcUnicyclicOdd,
    Bipartite,
    TriangleFree,
}

impl SurveyClass {
    pub const ALL: [SurveyClass; 7] = [
        SurveyClass::Trees,
        SurveyClass::Unicyclic,
        SurveyClass::WcTrees,
        SurveyClass::WcUnicyclicEven,
        SurveyClass::WcUnicyclicOdd,
        SurveyClass::Bipartite,
        SurveyClass::TriangleFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SurveyClass::Trees => "trees",
            SurveyClass::Unicyclic => "unicyclic",
            SurveyClass::WcTrees => "wc_trees",
            SurveyClass::WcUnicyclicEven => "wc_unicyclic_even",
            SurveyClass::WcUnicyclicOdd => "wc_unicyclic_odd",
            SurveyClass::Bipartite => "bipartite",
            SurveyClass::TriangleFree => "triangle_free",
        }
    }
}

impl fmt::Display for SurveyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SurveyClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<SurveyClass> {
        SurveyClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown survey class {s:?}")))
    }
}

/// One graph of a named bound.
#[derive(Clone, Debug, Serialize)]
pub struct Extreme {
    pub name: String,
    pub graph6: String,
    pub key: CanonicalKey,
    pub poly: String,
}

impl Extreme {
    fn new(name: impl Into<String>, g: &Graph) -> Extreme {
        Extreme {
            name: name.into(),
            graph6: render_graph6(g),
            key: canonical_key(g),
            poly: indpoly(g).to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceClass {
    pub poly: String,
    pub members: Vec<CanonicalKey>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurveyReport {
    pub class: SurveyClass,
    pub order: usize,
    pub count: usize,
    /// False when the bounds are conjectural and only observed.
    pub asserted: bool,
    pub min: Extreme,
    pub max: Extreme,
    /// Members with the same polynomial as the lower bound.
    pub min_equivalents: Vec<CanonicalKey>,
    pub max_equivalents: Vec<CanonicalKey>,
    pub violations: Vec<String>,
    /// Sizes of the polynomial classes: size → number of classes.
    pub class_sizes: BTreeMap<usize, usize>,
    pub nontrivial_classes: Vec<EquivalenceClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antichains: Option<AntichainReport>,
}

#[derive(Clone, Debug, Default)]
pub struct SurveyOptions {
    /// Worker threads; results are identical for every value.
    pub workers: usize,
    /// Also search for antichains of at most this size.
    pub antichain: Option<usize>,
}

struct Bounds {
    min: (String, Graph),
    max: (String, Graph),
    expected_min: Option<Vec<Graph>>,
    expected_max: Option<Vec<Graph>>,
    asserted: bool,
}

fn class_members(class: SurveyClass, n: usize) -> Result<Vec<Graph>> {
    let wc = |gs: Vec<Graph>| -> Result<Vec<Graph>> {
        let mut out = Vec::new();
        for g in gs {
            if maximal_independent_sets(&g)?.well_covered {
                out.push(g);
            }
        }
        Ok(out)
    };
    match class {
        SurveyClass::Trees => trees(n),
        SurveyClass::Unicyclic => connected_unicyclic(n),
        SurveyClass::WcTrees => {
            even(class, n, 2)?;
            wc(trees(n)?)
        }
        SurveyClass::WcUnicyclicEven => {
            even(class, n, 6)?;
            wc(connected_unicyclic(n)?)
        }
        SurveyClass::WcUnicyclicOdd => {
            if n.is_multiple_of(2) {
                return Err(Error::Precondition(format!("{class} needs odd n, got {n}")));
            }
            wc(connected_unicyclic(n)?)
        }
        SurveyClass::Bipartite => Ok(connected_graphs(n)?
            .into_iter()
            .filter(Graph::is_bipartite)
            .collect()),
        SurveyClass::TriangleFree => Ok(connected_graphs(n)?
            .into_iter()
            .filter(|g| !g.has_triangle())
            .collect()),
    }
}

fn even(class: SurveyClass, n: usize, min: usize) -> Result<()> {
    if n % 2 == 1 || n < min {
        return Err(Error::Precondition(format!(
            "{class} needs even n ≥ {min}, got {n}"
        )));
    }
    Ok(())
}

fn bounds(class: SurveyClass, n: usize) -> Result<Bounds> {
    let named = |s: &str, g: Graph| (s.to_string(), g);
    Ok(match class {
        SurveyClass::Trees => Bounds {
            min: named(&format!("P_{n}"), path(n)?),
            max: named(&format!("S_{n}"), star(n)?),
            expected_min: Some(vec![path(n)?]),
            expected_max: Some(vec![star(n)?]),
            asserted: true,
        },
        SurveyClass::Unicyclic => {
            let u = if n == 3 { cycle(3)? } else { u_n(n)? };
            let mut min_side = vec![cycle(n)?];
            let mut max_side = vec![u.clone()];
            if n >= 4 {
                min_side.push(d_n(n)?);
            }
            if n == 4 {
                max_side.push(cycle(4)?);
            }
            Bounds {
                min: named(&format!("C_{n}"), cycle(n)?),
                max: named(&format!("U_{n}"), u),
                expected_min: Some(min_side),
                expected_max: Some(max_side),
                asserted: true,
            }
        }
        SurveyClass::WcTrees => {
            let m = n / 2;
            Bounds {
                min: named(&format!("P_{m}*"), corona(&path(m)?)?),
                max: named(&format!("S_{m}*"), corona(&star(m)?)?),
                expected_min: Some(vec![corona(&path(m)?)?]),
                expected_max: Some(vec![corona(&star(m)?)?]),
                asserted: true,
            }
        }
        SurveyClass::WcUnicyclicEven => {
            let m = n / 2;
            let u = if m == 3 { cycle(3)? } else { u_n(m)? };
            Bounds {
                min: named(&format!("C_{m}*"), corona(&cycle(m)?)?),
                max: named(&format!("U_{m}*"), corona(&u)?),
                expected_min: None,
                expected_max: None,
                asserted: true,
            }
        }
        SurveyClass::WcUnicyclicOdd => {
            let min = if n <= 7 {
                named(&format!("C_{n}"), cycle(n)?)
            } else {
                named(
                    &format!("H_{n} = G(3,{},0)", (n - 3) / 2),
                    g_gkl(3, (n - 3) / 2, 0)?,
                )
            };
            Bounds {
                min,
                max: named(&format!("M_{n}"), m_n(n)?),
                expected_min: None,
                expected_max: None,
                asserted: true,
            }
        }
        SurveyClass::Bipartite | SurveyClass::TriangleFree => Bounds {
            min: named(&format!("P_{n}"), path(n)?),
            max: named(
                &format!("K_{{{},{}}}", n.div_ceil(2), n / 2),
                if n == 1 {
                    path(1)?
                } else {
                    complete_bipartite(n.div_ceil(2), n / 2)?
                },
            ),
            expected_min: None,
            expected_max: None,
            asserted: class == SurveyClass::Bipartite,
        },
    })
}

pub(crate) fn pool(workers: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))
}

struct Row {
    key: CanonicalKey,
    graph6: String,
    poly: Poly,
    profile: Profile,
    min_rel: Relation,
    max_rel: Relation,
}

/// Check every member of the class against the lower and upper bound.
pub fn survey_extremal(class: SurveyClass, n: usize, opts: &SurveyOptions) -> Result<SurveyReport> {
    let members = class_members(class, n)?;
    let b = bounds(class, n)?;
    let pmin = Profile::of(&b.min.1)?;
    let pmax = Profile::of(&b.max.1)?;
    let rows: Vec<Row> = pool(opts.workers)?.install(|| {
        members
            .par_iter()
            .map(|g| -> Result<Row> {
                let profile = Profile::of(g)?;
                Ok(Row {
                    key: canonical_key(g),
                    graph6: render_graph6(g),
                    poly: profile.poly.clone(),
                    min_rel: relate(&pmin, &profile)?,
                    max_rel: relate(&profile, &pmax)?,
                    profile,
                })
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let mut violations = Vec::new();
    let mut min_eq = Vec::new();
    let mut max_eq = Vec::new();
    for r in &rows {
        match r.min_rel {
            Relation::Equivalent => min_eq.push(r.key.clone()),
            Relation::FirstStrictlyLess(_) => {}
            ref other => violations.push(format!(
                "{}: {} vs {} is {}",
                r.graph6,
                b.min.0,
                r.graph6,
                other.name()
            )),
        }
        match r.max_rel {
            Relation::Equivalent => max_eq.push(r.key.clone()),
            Relation::FirstStrictlyLess(_) => {}
            ref other => violations.push(format!(
                "{}: {} vs {} is {}",
                r.graph6,
                r.graph6,
                b.max.0,
                other.name()
            )),
        }
    }
    min_eq.sort();
    max_eq.sort();
    for (side, expected, got) in [
        ("lower", &b.expected_min, &min_eq),
        ("upper", &b.expected_max, &max_eq),
    ] {
        if let Some(exp) = expected {
            let mut keys: Vec<CanonicalKey> = exp.iter().map(canonical_key).collect();
            keys.sort();
            keys.dedup();
            if &keys != got {
                violations.push(format!(
                    "{side} bound attained by {got:?}, expected exactly {keys:?}"
                ));
            }
        }
    }
    let classes = group_by_poly(rows.iter().map(|r| (r.key.clone(), r.poly.clone())));
    let mut class_sizes = BTreeMap::new();
    for c in &classes {
        *class_sizes.entry(c.members.len()).or_insert(0) += 1;
    }
    let antichains = match opts.antichain {
        Some(max) => {
            let profiles: Vec<(CanonicalKey, Profile)> = rows
                .iter()
                .map(|r| (r.key.clone(), r.profile.clone()))
                .collect();
            Some(antichains_of_profiles(&profiles, max, opts.workers)?)
        }
        None => None,
    };
    Ok(SurveyReport {
        class,
        order: n,
        count: rows.len(),
        asserted: b.asserted,
        min: Extreme::new(b.min.0, &b.min.1),
        max: Extreme::new(b.max.0, &b.max.1),
        min_equivalents: min_eq,
        max_equivalents: max_eq,
        violations,
        class_sizes,
        nontrivial_classes: classes
            .into_iter()
            .filter(|c| c.members.len() > 1)
            .collect(),
        antichains,
    })
}

/// Every `G(g, k, ℓ)` of the given odd order, up to isomorphism.
pub fn sp_members(order: usize) -> Result<Vec<Graph>> {
    if order.is_multiple_of(2) || order < 5 {
        return Err(Error::Precondition(format!(
            "no G(g,k,ℓ) has order {order}"
        )));
    }
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for g in [3, 5] {
        if order <= g {
            continue;
        }
        let total = (order - g) / 2;
        for k in 0..=total {
            let h = g_gkl(g, k, total - k)?;
            if seen.insert(canonical_key(&h)) {
                out.push(h);
            }
        }
    }
    Ok(out)
}

fn group_by_poly(items: impl Iterator<Item = (CanonicalKey, Poly)>) -> Vec<EquivalenceClass> {
    let mut map: BTreeMap<Poly, Vec<CanonicalKey>> = BTreeMap::new();
    for (k, p) in items {
        map.entry(p).or_default().push(k);
    }
    map.into_iter()
        .map(|(p, mut members)| {
            members.sort();
            members.dedup();
            EquivalenceClass {
                poly: p.to_string(),
                members,
            }
        })
        .collect()
}

/// Partition graphs by independence polynomial; isomorphic copies collapse.
pub fn equivalence_classes(graphs: &[Graph]) -> Vec<EquivalenceClass> {
    group_by_poly(graphs.iter().map(|g| (canonical_key(g), indpoly(g))))
}

#[derive(Clone, Debug, Serialize)]
pub struct AntichainReport {
    /// Distinct polynomials compared.
    pub classes: usize,
    pub pairs_compared: usize,
    /// Incomparable pairs, one representative each, with witnesses.
    pub incomparable_pairs: Vec<IncomparablePair>,
    /// A largest antichain of size at most the requested bound.
    pub largest: Vec<CanonicalKey>,
    pub max_size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct IncomparablePair {
    pub left: CanonicalKey,
    pub right: CanonicalKey,
    pub witnesses: Vec<String>,
}

/// Pairwise-incomparable sets among the polynomial classes of `graphs`.
pub fn antichains(graphs: &[Graph], max_size: usize, workers: usize) -> Result<AntichainReport> {
    let profiles = graphs
        .iter()
        .map(|g| Ok((canonical_key(g), Profile::of(g)?)))
        .collect::<Result<Vec<_>>>()?;
    antichains_of_profiles(&profiles, max_size, workers)
}

fn antichains_of_profiles(
    profiles: &[(CanonicalKey, Profile)],
    max_size: usize,
    workers: usize,
) -> Result<AntichainReport> {
    // one representative per polynomial, smallest key first
    let mut reps: HashMap<&Poly, (&CanonicalKey, &Profile)> = HashMap::new();
    for (k, p) in profiles {
        let e = reps.entry(&p.poly).or_insert((k, p));
        if k < e.0 {
            *e = (k, p);
        }
    }
    let mut reps: Vec<(&CanonicalKey, &Profile)> = reps.into_values().collect();
    reps.sort_by(|a, b| a.0.cmp(b.0));
    let m = reps.len();
    let pairs: Vec<(usize, usize)> = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .collect();
    let rels: Vec<Relation> = pool(workers)?.install(|| {
        pairs
            .par_iter()
            .map(|&(i, j)| relate(reps[i].1, reps[j].1))
            .collect::<Result<Vec<_>>>()
    })?;
    let mut incomparable = vec![vec![false; m]; m];
    let mut found = Vec::new();
    for (&(i, j), rel) in pairs.iter().zip(&rels) {
        if let Relation::Incomparable { .. } = rel {
            incomparable[i][j] = true;
            incomparable[j][i] = true;
            found.push(IncomparablePair {
                left: reps[i].0.clone(),
                right: reps[j].0.clone(),
                witnesses: rel.witnesses().iter().map(ToString::to_string).collect(),
            });
        }
    }
    let mut best = Vec::new();
    if max_size >= 1 && m >= 1 {
        best = vec![0];
        let mut cur = Vec::new();
        largest_clique(
            &incomparable,
            &mut cur,
            (0..m).collect(),
            max_size,
            &mut best,
        );
    }
    Ok(AntichainReport {
        classes: m,
        pairs_compared: pairs.len(),
        incomparable_pairs: found,
        largest: best.iter().map(|&i| reps[i].0.clone()).collect(),
        max_size,
    })
}

fn largest_clique(
    adj: &[Vec<bool>],
    cur: &mut Vec<usize>,
    cand: Vec<usize>,
    cap: usize,
    best: &mut Vec<usize>,
) {
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    if best.len() >= cap || cur.len() + cand.len() <= best.len() {
        return;
    }
    for (idx, &v) in cand.iter().enumerate() {
        if cur.len() + (cand.len() - idx) <= best.len() {
            return;
        }
        let next: Vec<usize> = cand[idx + 1..]
            .iter()
            .copied()
            .filter(|&w| adj[v][w])
            .collect();
        cur.push(v);
        largest_clique(adj, cur, next, cap, best);
        cur.pop();
        if best.len() >= cap {
            return;
        }
    }
}
