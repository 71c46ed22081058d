//! `indroots`: independence polynomials, roots and the order they induce.

mod input;
mod verify;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use indroots::engine::{global_cache, indpoly_bruteforce, indpoly_clique, init_global_cache};
use indroots::enumerate::{
    antichains, connected_graphs, connected_graphs_with_girth, connected_unicyclic,
    equivalence_classes, sp_members, survey_extremal, trees, well_covered_unicyclic_constructed,
    SurveyClass, SurveyOptions,
};
use indroots::order::report;
use indroots::wellcovered::{maximal_independent_sets, pendant_edges_perfect_matching};
use indroots::{indpoly, xi, Error, Graph, PolyCache, Rational, Result};

use input::{collect, exactly_two, g6, Named};

/// Exact independence polynomials, their largest real roots and the
/// partial order they induce on graphs.
///
/// Graphs are given as graph6 strings, `@file` (one graph6 per line) or
/// family specs such as `u_n:7`, `g_gkl:3,2,1` or `t1`.
///
/// Exit codes: 0 success, 2 usage or input error, 3 budget exceeded,
/// 4 internal invariant violated (including a failed `verify`).
#[derive(Parser)]
#[command(name = "indroots", version)]
struct Cli {
    /// Emit JSON instead of text (one document per line).
    #[arg(long, global = true)]
    json: bool,

    /// Persistent polynomial cache file.
    #[arg(long, global = true, env = "INDROOTS_CACHE")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArgs {
    /// graph6, @file or family spec.
    graphs: Vec<String>,

    /// Family spec; may be repeated.
    #[arg(long = "family", short = 'f')]
    families: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Recurrence,
    Bruteforce,
    Clique,
}

#[derive(Subcommand)]
enum Command {
    /// Print I(G, x).
    Poly {
        #[command(flatten)]
        g: GraphArgs,
        #[arg(long, value_enum, default_value = "recurrence")]
        method: Method,
    },
    /// Print an isolating interval for ξ(G), the largest real root in [−1, 0).
    Xi {
        #[command(flatten)]
        g: GraphArgs,
        /// Decimal digits; the interval is refined to width 10^-digits.
        #[arg(long, default_value_t = 12)]
        digits: usize,
    },
    /// Decide how two graphs relate under ⪯.
    Compare {
        #[command(flatten)]
        g: GraphArgs,
    },
    /// Decide whether two graphs share an independence polynomial.
    Equiv {
        #[command(flatten)]
        g: GraphArgs,
    },
    /// Maximal independent set sizes and well-coveredness.
    Wc {
        #[command(flatten)]
        g: GraphArgs,
    },
    /// Emit graphs as graph6 lines.
    Gen {
        #[command(subcommand)]
        what: Gen,
    },
    /// Extremal surveys, equivalence classes and antichains.
    Survey {
        #[command(subcommand)]
        what: Survey,
    },
    /// Run the regression suite and print one pass/fail row per check.
    Verify {
        /// Smaller orders throughout.
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Inspect or compact the polynomial cache.
    Cache {
        #[command(subcommand)]
        what: CacheCmd,
    },
}

#[derive(Subcommand)]
enum Gen {
    /// Named family members.
    Family { specs: Vec<String> },
    /// Free trees.
    Trees { n: usize },
    /// Connected unicyclic graphs.
    Unicyclic { n: usize },
    /// Connected graphs.
    Connected {
        n: usize,
        /// Only graphs of girth at least this.
        #[arg(long)]
        girth: Option<usize>,
    },
    /// Well-covered unicyclic graphs built from their structural families.
    WcUnicyclic { n: usize },
    /// Every G(g, k, ℓ) of an odd order.
    Sp { n: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    Trees,
    Unicyclic,
    Connected,
    WcUnicyclic,
}

#[derive(Args)]
struct SourceArgs {
    /// Generated class, or use --from.
    #[arg(value_enum, required_unless_present = "from")]
    source: Option<Source>,
    /// Order for a generated class.
    #[arg(required_unless_present = "from")]
    n: Option<usize>,
    /// Read graphs from a file of graph6 lines.
    #[arg(long, conflicts_with_all = ["source", "n"])]
    from: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Survey {
    /// Check every member of a class against its lower and upper bound.
    Extremal {
        /// trees, unicyclic, wc_trees, wc_unicyclic_even, wc_unicyclic_odd,
        /// bipartite or triangle_free.
        class: String,
        n: usize,
        /// Also search antichains up to this size.
        #[arg(long)]
        antichain: Option<usize>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Partition graphs by independence polynomial.
    Classes {
        #[command(flatten)]
        src: SourceArgs,
    },
    /// Find sets of pairwise incomparable graphs.
    Antichains {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

#[derive(Subcommand)]
enum CacheCmd {
    /// Entry count and hit statistics.
    Stats,
    /// List every entry as `graph6<TAB>polynomial`.
    List,
    /// Rewrite the file without duplicates.
    Compact,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Budget { .. } => 3,
        Error::Invariant(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(path) = &cli.cache {
        init_global_cache(PolyCache::with_file(path));
    }
    let mut out = io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(code) => {
            let _ = out.flush();
            ExitCode::from(code)
        }
        Err(e) => {
            let _ = out.flush();
            eprintln!("indroots: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn emit(out: &mut impl Write, v: &Value) -> Result<()> {
    writeln!(out, "{v}")?;
    Ok(())
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<u8> {
    match &cli.command {
        Command::Poly { g, method } => {
            for n in collect(&g.graphs, &g.families)? {
                let p = match method {
                    Method::Recurrence => indpoly(&n.graph),
                    Method::Bruteforce => indpoly_bruteforce(&n.graph)?,
                    Method::Clique => indpoly_clique(&n.graph, &greedy_clique(&n.graph))?,
                };
                if cli.json {
                    let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
                    emit(
                        out,
                        &json!({"graph": n.label, "graph6": g6(&n.graph), "poly": p.to_string(), "coeffs": coeffs}),
                    )?;
                } else {
                    writeln!(out, "{p}")?;
                }
            }
        }
        Command::Xi { g, digits } => {
            let width: Rational = format!("1/1{}", "0".repeat(*digits))
                .parse()
                .map_err(|_| Error::Parse(format!("bad digit count {digits}")))?;
            for n in collect(&g.graphs, &g.families)? {
                let iv = xi(&n.graph)?;
                let iv = if iv.width() > width {
                    iv.refine(&width)
                } else {
                    iv
                };
                let exact = iv.exact().map(ToString::to_string);
                if cli.json {
                    emit(
                        out,
                        &json!({
                            "graph": n.label,
                            "poly": iv.poly().to_string(),
                            "lo": iv.lo().to_string(),
                            "hi": iv.hi().to_string(),
                            "rational": exact.is_some(),
                            "exact": exact,
                            "decimal": iv.to_decimal(*digits),
                        }),
                    )?;
                } else if let Some(r) = exact {
                    writeln!(out, "{r} (exact rational)")?;
                } else {
                    writeln!(out, "{}", iv.to_decimal(*digits))?;
                }
            }
        }
        Command::Compare { g } => {
            let (a, b) = exactly_two(&g.graphs, &g.families)?;
            let r = report(&a.graph, &b.graph)?;
            if cli.json {
                let v = serde_json::to_value(&r).map_err(|e| Error::Invariant(e.to_string()))?;
                emit(out, &v)?;
            } else if r.witnesses.is_empty() {
                writeln!(out, "{}", r.relation)?;
            } else {
                writeln!(
                    out,
                    "{} (witnesses: {})",
                    r.relation,
                    r.witnesses.join(", ")
                )?;
            }
        }
        Command::Equiv { g } => {
            let (a, b) = exactly_two(&g.graphs, &g.families)?;
            let (pa, pb) = (indpoly(&a.graph), indpoly(&b.graph));
            if cli.json {
                emit(
                    out,
                    &json!({"equivalent": pa == pb, "left_poly": pa.to_string(), "right_poly": pb.to_string()}),
                )?;
            } else {
                writeln!(
                    out,
                    "{}",
                    if pa == pb {
                        "equivalent"
                    } else {
                        "not equivalent"
                    }
                )?;
            }
        }
        Command::Wc { g } => {
            for n in collect(&g.graphs, &g.families)? {
                let r = maximal_independent_sets(&n.graph)?;
                let pendant = pendant_edges_perfect_matching(&n.graph);
                if cli.json {
                    emit(
                        out,
                        &json!({
                            "graph": n.label,
                            "sizes": r.sizes,
                            "count": r.count(),
                            "well_covered": r.well_covered,
                            "very_well_covered": r.very_well_covered,
                            "pendant_perfect_matching": pendant,
                            "min_witness": r.min_witness,
                            "max_witness": r.max_witness,
                        }),
                    )?;
                } else {
                    let sizes: Vec<String> =
                        r.sizes.iter().map(|(k, c)| format!("{k}:{c}")).collect();
                    writeln!(
                        out,
                        "{}\twell_covered={} very_well_covered={} pendant_perfect_matching={} sizes={}",
                        n.label,
                        r.well_covered,
                        r.very_well_covered,
                        pendant,
                        sizes.join(",")
                    )?;
                }
            }
        }
        Command::Gen { what } => {
            let graphs: Vec<Graph> = match what {
                Gen::Family { specs } => {
                    collect(&[], specs)?.into_iter().map(|n| n.graph).collect()
                }
                Gen::Trees { n } => trees(*n)?,
                Gen::Unicyclic { n } => connected_unicyclic(*n)?,
                Gen::Connected { n, girth: None } => connected_graphs(*n)?,
                Gen::Connected { n, girth: Some(g) } => connected_graphs_with_girth(*n, *g)?,
                Gen::WcUnicyclic { n } => well_covered_unicyclic_constructed(*n)?,
                Gen::Sp { n } => sp_members(*n)?,
            };
            for g in graphs {
                writeln!(out, "{}", g6(&g))?;
            }
        }
        Command::Survey { what } => return survey(what, cli.json, out),
        Command::Verify { quick, workers } => {
            let rows = verify::run(*quick, *workers);
            let ok = rows.iter().all(|r| r.passed);
            if cli.json {
                let v: Vec<Value> = rows
                    .iter()
                    .map(|r| json!({"check": r.name, "passed": r.passed, "detail": r.detail}))
                    .collect();
                emit(out, &Value::Array(v))?;
            } else {
                let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
                for r in &rows {
                    let verdict = if r.passed { "pass" } else { "FAIL" };
                    writeln!(out, "{:width$}  {verdict}  {}", r.name, r.detail)?;
                }
            }
            return Ok(if ok { 0 } else { 4 });
        }
        Command::Cache { what } => {
            if cli.cache.is_none() {
                return Err(Error::Parse(
                    "no cache file: pass --cache or set INDROOTS_CACHE".into(),
                ));
            }
            let cache = global_cache();
            cache.load()?;
            match what {
                CacheCmd::Stats => {
                    let s = cache.stats();
                    if cli.json {
                        emit(
                            out,
                            &json!({"entries": s.entries, "hits": s.hits, "misses": s.misses}),
                        )?;
                    } else {
                        writeln!(out, "entries {}", s.entries)?;
                    }
                }
                CacheCmd::List => {
                    for (k, p) in cache.entries() {
                        writeln!(out, "{}\t{p}", k.graph6())?;
                    }
                }
                CacheCmd::Compact => {
                    let kept = cache.compact()?;
                    if cli.json {
                        emit(out, &json!({"entries": kept}))?;
                    } else {
                        writeln!(out, "kept {kept} entries")?;
                    }
                }
            }
        }
    }
    Ok(0)
}

fn survey(what: &Survey, as_json: bool, out: &mut impl Write) -> Result<u8> {
    let to_value = |v: std::result::Result<Value, serde_json::Error>| {
        v.map_err(|e| Error::Invariant(e.to_string()))
    };
    match what {
        Survey::Extremal {
            class,
            n,
            antichain,
            workers,
        } => {
            let class: SurveyClass = class.parse()?;
            let opts = SurveyOptions {
                workers: *workers,
                antichain: *antichain,
            };
            let r = survey_extremal(class, *n, &opts)?;
            if as_json {
                emit(out, &to_value(serde_json::to_value(&r))?)?;
            } else {
                writeln!(
                    out,
                    "class {} order {}: {} graphs",
                    r.class, r.order, r.count
                )?;
                writeln!(out, "lower bound {} = {}", r.min.name, r.min.poly)?;
                writeln!(out, "upper bound {} = {}", r.max.name, r.max.poly)?;
                let keys = |ks: &[indroots::CanonicalKey]| {
                    ks.iter()
                        .map(|k| k.graph6().to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                writeln!(
                    out,
                    "equivalent to lower bound: {}",
                    keys(&r.min_equivalents)
                )?;
                writeln!(
                    out,
                    "equivalent to upper bound: {}",
                    keys(&r.max_equivalents)
                )?;
                if !r.asserted {
                    writeln!(out, "bounds are conjectural; reported, not asserted")?;
                }
                writeln!(out, "violations: {}", r.violations.len())?;
                for v in &r.violations {
                    writeln!(out, "  {v}")?;
                }
                if let Some(a) = &r.antichains {
                    writeln!(
                        out,
                        "incomparable pairs: {}, largest antichain: {}",
                        a.incomparable_pairs.len(),
                        keys(&a.largest)
                    )?;
                }
            }
            Ok(if r.violations.is_empty() || !r.asserted {
                0
            } else {
                4
            })
        }
        Survey::Classes { src } => {
            let graphs = source(src)?;
            let classes = equivalence_classes(&graphs);
            if as_json {
                emit(out, &to_value(serde_json::to_value(&classes))?)?;
            } else {
                for c in classes {
                    let ks: Vec<&str> = c.members.iter().map(|k| k.graph6()).collect();
                    writeln!(out, "{}\t{}", c.poly, ks.join(" "))?;
                }
            }
            Ok(0)
        }
        Survey::Antichains {
            src,
            max_size,
            workers,
        } => {
            let graphs = source(src)?;
            let r = antichains(&graphs, *max_size, *workers)?;
            if as_json {
                emit(out, &to_value(serde_json::to_value(&r))?)?;
            } else {
                writeln!(
                    out,
                    "{} polynomial classes, {} pairs compared",
                    r.classes, r.pairs_compared
                )?;
                for p in &r.incomparable_pairs {
                    writeln!(
                        out,
                        "incomparable {} {} ({})",
                        p.left.graph6(),
                        p.right.graph6(),
                        p.witnesses.join(", ")
                    )?;
                }
                let ks: Vec<&str> = r.largest.iter().map(|k| k.graph6()).collect();
                writeln!(
                    out,
                    "largest antichain (size ≤ {}): {}",
                    r.max_size,
                    ks.join(" ")
                )?;
            }
            Ok(0)
        }
    }
}

fn source(src: &SourceArgs) -> Result<Vec<Graph>> {
    if let Some(path) = &src.from {
        let named: Vec<Named> = input::resolve(&format!("@{}", path.display()))?;
        return Ok(named.into_iter().map(|n| n.graph).collect());
    }
    let n = src.n.expect("clap requires n");
    match src.source.expect("clap requires a source") {
        Source::Trees => trees(n),
        Source::Unicyclic => connected_unicyclic(n),
        Source::Connected => connected_graphs(n),
        Source::WcUnicyclic => well_covered_unicyclic_constructed(n),
    }
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let Some(start) = (0..g.order()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))) else {
        return Vec::new();
    };
    let mut c = vec![start];
    for v in 0..g.order() {
        if v != start && c.iter().all(|&u| g.has_edge(u, v)) {
            c.push(v);
        }
    }
    c
}
