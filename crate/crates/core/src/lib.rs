//! Exact independence polynomials and the order `⪯` they induce on graphs.
//!
//! * [`graph`]: simple graphs, graph6, canonical keys and vertex surgery.
//! * [`poly`]: integer polynomials, rationals and Sturm chains.
//! * [`engine`]: `I(G, x)` by three independent routes with a shared cache.
//! * [`roots`]: certified isolation of real roots and of `ξ(G)`.
//! * [`order`]: the exact decision procedure for `H ⪯ G`.
//! * [`families`]: named graphs and the edge-swap transforms.
//! * [`wellcovered`]: maximal independent sets and well-coveredness.
//! * [`enumerate`]: exhaustive generation and extremal surveys.

pub mod engine;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod order;
pub mod poly;
pub mod roots;
pub mod wellcovered;

pub use engine::{independence_number, indpoly, indpoly_bruteforce, indpoly_clique, PolyCache};
pub use enumerate::{survey_extremal, SurveyClass, SurveyReport};
pub use error::{Error, Result};
pub use families::{corona, make, FamilySpec};
pub use graph::{canonical_key, parse_graph6, render_graph6, CanonicalKey, Girth, Graph};
pub use order::{compare, is_equivalent, is_preceq, Relation};
pub use poly::{Poly, Rational};
pub use roots::{xi, IsolatingInterval};
