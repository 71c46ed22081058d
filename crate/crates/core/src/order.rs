//! The relation `H ⪯ G ⟺ I(H, x) ≥ I(G, x)` on `[ξ(G), 0]`, decided exactly.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::engine::indpoly;
use crate::error::{Error, Result};
use crate::graph::{render_graph6, Graph};
use crate::poly::{Poly, Rational};
use crate::roots::{isolate_roots, sign_at_root, xi_of_poly, IsolatingInterval};

/// A polynomial together with its certified `ξ`.
#[derive(Clone, Debug)]
pub struct Profile {
    pub poly: Poly,
    pub xi: IsolatingInterval,
}

impl Profile {
    pub fn of(g: &Graph) -> Result<Profile> {
        Profile::from_poly(indpoly(g))
    }

    pub fn from_poly(poly: Poly) -> Result<Profile> {
        let xi = xi_of_poly(&poly)?;
        Ok(Profile { poly, xi })
    }
}

/// Evidence that `H ⪯ G`: the sign of `I(H)` at `ξ(G)`, the roots of
/// `I(H) − I(G)` strictly inside `(ξ(G), 0)`, and one sample per gap.
#[derive(Clone, Debug, Serialize)]
pub struct Transcript {
    pub xi: IsolatingInterval,
    pub sign_at_xi: i8,
    pub crossings: Vec<IsolatingInterval>,
    pub samples: Vec<(String, i8)>,
}

#[derive(Clone, Debug)]
pub enum Decision {
    Holds(Transcript),
    /// `I(H)(witness) < I(G)(witness)` with `witness ∈ [ξ(G), 0]`.
    Fails {
        witness: Rational,
    },
}

impl Decision {
    pub fn holds(&self) -> bool {
        matches!(self, Decision::Holds(_))
    }
}

#[derive(Clone, Debug)]
pub enum Relation {
    Equivalent,
    /// `H ≺ G`
    FirstStrictlyLess(Transcript),
    /// `G ≺ H`
    SecondStrictlyLess(Transcript),
    /// `I(H) < I(G)` at `below ∈ [ξ(G), 0]` and `I(H) > I(G)` at
    /// `above ∈ [ξ(H), 0]`.
    Incomparable {
        below: Rational,
        above: Rational,
    },
}

impl Relation {
    pub fn name(&self) -> &'static str {
        match self {
            Relation::Equivalent => "equivalent",
            Relation::FirstStrictlyLess(_) => "first_strictly_less",
            Relation::SecondStrictlyLess(_) => "second_strictly_less",
            Relation::Incomparable { .. } => "incomparable",
        }
    }

    pub fn witnesses(&self) -> Vec<Rational> {
        match self {
            Relation::Incomparable { below, above } => vec![below.clone(), above.clone()],
            _ => Vec::new(),
        }
    }

    pub fn is_comparable(&self) -> bool {
        !matches!(self, Relation::Incomparable { .. })
    }
}

/// Decide `H ⪯ G` from profiles.
pub fn decide(h: &Profile, g: &Profile) -> Decision {
    let d = &h.poly - &g.poly;
    if d.is_zero() {
        return Decision::Holds(Transcript {
            xi: g.xi.clone(),
            sign_at_xi: sign_at_root(&h.poly, &g.xi),
            crossings: Vec::new(),
            samples: Vec::new(),
        });
    }
    let (k, c) = d.lowest_term().expect("nonzero");
    let near_zero = if c.is_positive() == (k % 2 == 0) {
        1
    } else {
        -1
    };
    if near_zero < 0 {
        return Decision::Fails {
            witness: negative_point_near_zero(&d, &g.xi),
        };
    }
    let at_xi = sign_at_root(&h.poly, &g.xi);
    if at_xi < 0 {
        return Decision::Fails {
            witness: negative_point_near_root(&d, &g.xi),
        };
    }
    // D / x^k has the same roots in (ξ(G), 0) and does not vanish at 0
    let e = Poly::new(d.coeffs()[k..].to_vec());
    let zero = Rational::zero();
    let mut crossings: Vec<IsolatingInterval> = isolate_roots(&e, g.xi.lo(), &zero)
        .expect("nonzero")
        .into_iter()
        .filter(|r| r.cmp_root(&g.xi) == Ordering::Greater)
        .collect();
    let mut chain = Vec::with_capacity(crossings.len() + 1);
    chain.push(g.xi.clone());
    chain.append(&mut crossings);
    separate(&mut chain, &zero);
    let mut samples = Vec::with_capacity(chain.len());
    for i in 0..chain.len() {
        let right = chain.get(i + 1).map_or(&zero, |r| r.lo());
        let t = (chain[i].hi() + right) / Rational::from_integer(BigInt::from(2));
        let s = d.sign_at(&t);
        if s < 0 {
            return Decision::Fails { witness: t };
        }
        samples.push((t.to_string(), s));
    }
    let xi = chain.remove(0);
    Decision::Holds(Transcript {
        xi,
        sign_at_xi: at_xi,
        crossings: chain,
        samples,
    })
}

/// Refine adjacent intervals until `a.hi < b.lo` for each neighbouring pair
/// and the last `hi` is below `end`.
fn separate(chain: &mut [IsolatingInterval], end: &Rational) {
    loop {
        let mut done = true;
        for i in 0..chain.len() {
            let right = chain.get(i + 1).map(|r| r.lo().clone());
            let limit = right.as_ref().unwrap_or(end);
            if chain[i].hi() >= limit {
                done = false;
                let halve_left = match chain.get(i + 1) {
                    Some(r) => chain[i].width() >= r.width(),
                    None => true,
                };
                let target = if halve_left { i } else { i + 1 };
                let w = chain[target].width() / Rational::from_integer(BigInt::from(2));
                chain[target] = chain[target].refine(&w);
            }
        }
        if done {
            return;
        }
    }
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

fn negative_point_near_zero(d: &Poly, xi: &IsolatingInterval) -> Rational {
    let mut t = -half();
    loop {
        if xi.cmp_rational(&t) != Ordering::Greater && d.sign_at(&t) < 0 {
            return t;
        }
        t *= half();
    }
}

fn negative_point_near_root(d: &Poly, xi: &IsolatingInterval) -> Rational {
    let mut iv = xi.clone();
    loop {
        if d.sign_at(iv.hi()) < 0 {
            return iv.hi().clone();
        }
        iv = iv.refine(&(iv.width() * half()));
    }
}

/// `H ⪯ G`
pub fn is_preceq(h: &Graph, g: &Graph) -> Result<bool> {
    Ok(decide(&Profile::of(h)?, &Profile::of(g)?).holds())
}

/// `H ∼ G`
pub fn is_equivalent(h: &Graph, g: &Graph) -> bool {
    indpoly(h) == indpoly(g)
}

pub fn compare(h: &Graph, g: &Graph) -> Result<Relation> {
    relate(&Profile::of(h)?, &Profile::of(g)?)
}

/// The points `−k/10` and then `−k/64` are tried as witnesses before the
/// decision procedure's own.
fn scan_points() -> impl Iterator<Item = Rational> {
    let tenths = (1..10).map(|k| Rational::new(BigInt::from(-k), BigInt::from(10)));
    let sixty_fourths = (1..64).map(|k| Rational::new(BigInt::from(-k), BigInt::from(64)));
    tenths.chain(sixty_fourths)
}

pub fn relate(h: &Profile, g: &Profile) -> Result<Relation> {
    if h.poly == g.poly {
        return Ok(Relation::Equivalent);
    }
    let forward = decide(h, g);
    let backward = decide(g, h);
    match (forward, backward) {
        (Decision::Holds(t), Decision::Fails { .. }) => Ok(Relation::FirstStrictlyLess(t)),
        (Decision::Fails { .. }, Decision::Holds(t)) => Ok(Relation::SecondStrictlyLess(t)),
        (Decision::Holds(_), Decision::Holds(_)) => Err(Error::Invariant(format!(
            "{} and {} are mutually ⪯ but differ",
            h.poly, g.poly
        ))),
        (Decision::Fails { witness: w1 }, Decision::Fails { witness: w2 }) => {
            let d = &h.poly - &g.poly;
            let in_range =
                |q: &Rational, xi: &IsolatingInterval| xi.cmp_rational(q) != Ordering::Greater;
            let below = scan_points()
                .find(|q| in_range(q, &g.xi) && d.sign_at(q) < 0)
                .unwrap_or(w1);
            let above = scan_points()
                .find(|q| in_range(q, &h.xi) && d.sign_at(q) > 0)
                .unwrap_or(w2);
            Ok(Relation::Incomparable { below, above })
        }
    }
}

/// `{left, right, relation, witnesses, xi_left, xi_right}`
#[derive(Clone, Debug, Serialize)]
pub struct RelationReport {
    pub left: String,
    pub right: String,
    pub left_poly: String,
    pub right_poly: String,
    pub relation: &'static str,
    pub witnesses: Vec<String>,
    pub xi_left: IsolatingInterval,
    pub xi_right: IsolatingInterval,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transcript: Option<Transcript>,
}

pub fn report(h: &Graph, g: &Graph) -> Result<RelationReport> {
    let (ph, pg) = (Profile::of(h)?, Profile::of(g)?);
    let rel = relate(&ph, &pg)?;
    let transcript = match &rel {
        Relation::FirstStrictlyLess(t) | Relation::SecondStrictlyLess(t) => Some(t.clone()),
        _ => None,
    };
    Ok(RelationReport {
        left: render_graph6(h),
        right: render_graph6(g),
        left_poly: ph.poly.to_string(),
        right_poly: pg.poly.to_string(),
        relation: rel.name(),
        witnesses: rel.witnesses().iter().map(ToString::to_string).collect(),
        xi_left: ph.xi,
        xi_right: pg.xi,
        transcript,
    })
}
