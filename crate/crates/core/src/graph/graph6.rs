//! graph6 text encoding, restricted to the one-byte size header (n ≤ 62).

use super::Graph;
use crate::error::{Error, Result};

pub const GRAPH6_MAX_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

fn parse_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Parses a single graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted; offsets in errors refer to `text`.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut body = text.trim();
    let mut base = lead;
    if let Some(rest) = body.strip_prefix(HEADER) {
        body = rest;
        base += HEADER.len();
    }
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(parse_error(base, "empty input"));
    };
    if !(63..=126).contains(&first) {
        return Err(parse_error(base, format!("byte 0x{first:02x} is not a graph6 character")));
    }
    if first == 126 {
        return Err(Error::UnsupportedSize {
            what: "graph6 order",
            actual: GRAPH6_MAX_ORDER + 1,
            limit: GRAPH6_MAX_ORDER,
        });
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[1..];
    if let Some(pos) = data.iter().position(|b| !(63..=126).contains(b)) {
        return Err(parse_error(
            base + 1 + pos,
            format!("byte 0x{:02x} is not a graph6 character", data[pos]),
        ));
    }
    if data.len() != expected {
        let offset = base + 1 + data.len().min(expected);
        return Err(parse_error(
            offset,
            format!(
                "expected {expected} adjacency bytes for order {n}, found {}",
                data.len()
            ),
        ));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in bits..expected * 6 {
        if bit(k) {
            return Err(parse_error(base + 1 + k / 6, "nonzero padding bits"));
        }
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj))
}

/// Parses one graph per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        if !line.trim().is_empty() {
            out.push(parse_graph6(line).map_err(|e| match e {
                Error::Parse { offset: o, message } => Error::Parse {
                    offset: offset + o,
                    message,
                },
                other => other,
            })?);
        }
        offset += line.len();
    }
    Ok(out)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::UnsupportedSize {
            what: "graph6 order",
            actual: n,
            limit: GRAPH6_MAX_ORDER,
        });
    }
    let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}
