use std::fs;

use indroots::{make, parse_graph6, render_graph6, Error, FamilySpec, Graph, Result};

/// A graph together with the text it was given as.
pub struct Named {
    pub label: String,
    pub graph: Graph,
}

/// Resolve a graph6 string, an `@file` of graph6 lines or a family spec.
pub fn resolve(arg: &str) -> Result<Vec<Named>> {
    if let Some(path) = arg.strip_prefix('@') {
        let text = fs::read_to_string(path)?;
        let mut out = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let graph = single(line).map_err(|e| Error::Parse(format!("{path}:{}: {e}", i + 1)))?;
            out.push(Named {
                label: line.to_string(),
                graph,
            });
        }
        return Ok(out);
    }
    Ok(vec![Named {
        label: arg.to_string(),
        graph: single(arg)?,
    }])
}

fn single(text: &str) -> Result<Graph> {
    match text.parse::<FamilySpec>() {
        Ok(spec) => make(&spec),
        Err(e) if text.contains(':') => Err(e),
        Err(_) => parse_graph6(text),
    }
}

pub fn family(spec: &str) -> Result<Named> {
    let s: FamilySpec = spec.parse()?;
    Ok(Named {
        label: s.to_string(),
        graph: make(&s)?,
    })
}

/// Positional graphs followed by `--family` graphs.
pub fn collect(graphs: &[String], families: &[String]) -> Result<Vec<Named>> {
    let mut out = Vec::new();
    for g in graphs {
        out.extend(resolve(g)?);
    }
    for f in families {
        out.push(family(f)?);
    }
    if out.is_empty() {
        return Err(Error::Parse("no graph given".into()));
    }
    Ok(out)
}

pub fn exactly_two(graphs: &[String], families: &[String]) -> Result<(Named, Named)> {
    let mut all = collect(graphs, families)?;
    if all.len() != 2 {
        return Err(Error::Parse(format!(
            "expected exactly two graphs, got {}",
            all.len()
        )));
    }
    let b = all.pop().unwrap();
    let a = all.pop().unwrap();
    Ok((a, b))
}

pub fn g6(g: &Graph) -> String {
    render_graph6(g)
}
