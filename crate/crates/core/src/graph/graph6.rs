//! graph6 encoding: `N(n)` followed by the upper triangle of the adjacency
//! matrix in column order, six bits per printable byte (value + 63).

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn render_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decode a single graph6 line. A leading `>>graph6<<` header and a
/// trailing newline are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut start = 0;
    let body = if let Some(rest) = text.strip_prefix(HEADER) {
        start = HEADER.len();
        rest
    } else {
        text
    };
    let body = body.strip_suffix('\n').unwrap_or(body);
    let body = body.strip_suffix('\r').unwrap_or(body);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(err(start, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(start + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(err(start + bytes.len(), "truncated 8-byte order header"));
        }
        let n = bytes[2..8]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 8)
    } else {
        if bytes.len() < 4 {
            return Err(err(start + bytes.len(), "truncated 4-byte order header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(err(
            start,
            format!("order {n} exceeds supported maximum {MAX_ORDER}"),
        ));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < need {
        return Err(err(
            start + bytes.len(),
            format!("expected {need} adjacency bytes, found {}", data.len()),
        ));
    }
    if data.len() > need {
        return Err(err(start + header_len + need, "trailing bytes"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.link(i, j);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = data[need - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(start + header_len + need - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Decode a line-delimited graph6 stream, skipping blank lines.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !line.trim().is_empty() {
            out.push(parse_graph6(line.trim_end()).map_err(|e| match e {
                Error::Graph6 { offset: o, reason } => Error::Graph6 {
                    offset: offset + o,
                    reason,
                },
                other => other,
            })?);
        }
        offset += line.len();
    }
    Ok(out)
}
