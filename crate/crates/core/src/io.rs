//! Text formats: a plain edge-list format and short-form graph6.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with 0-based decimal
//! indices, LF-terminated. graph6 follows the standard short form (orders up
//! to 62), bit-exact: `to_graph6` and `parse_graph6` round-trip.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Parses the `n m` / `u v` edge-list format.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 0, "empty input"))?;
    let mut parts = header.split_ascii_whitespace();
    let n: usize = parse_field(parts.next(), 1, "vertex count")?;
    let m: usize = parse_field(parts.next(), 1, "edge count")?;
    if parts.next().is_some() {
        return Err(Error::parse(1, 0, "trailing tokens after 'n m' header"));
    }

    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let (idx, line) = lines
            .next()
            .ok_or_else(|| Error::parse(pairs.len() + 2, 0, "missing edge line"))?;
        let lineno = idx + 1;
        let mut parts = line.split_ascii_whitespace();
        let u: usize = parse_field(parts.next(), lineno, "edge endpoint")?;
        let v: usize = parse_field(parts.next(), lineno, "edge endpoint")?;
        if parts.next().is_some() {
            return Err(Error::parse(lineno, 0, "trailing tokens after 'u v'"));
        }
        pairs.push((u, v));
    }
    for (idx, line) in lines {
        if !line.trim().is_empty() {
            return Err(Error::parse(idx + 1, 0, "unexpected extra line"));
        }
    }
    Graph::new(n, &pairs).map_err(|e| match e {
        e @ Error::Parse { .. } => e,
        other => Error::parse(1, 0, other.to_string()),
    })
}

fn parse_field(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| Error::parse(line, 0, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| Error::parse(line, 0, format!("bad {what} {token:?}")))
}

/// Writes the edge-list format; inverse of [`parse_edge_list`].
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Serializes to short-form graph6.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    debug_assert!(n <= MAX_ORDER);
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    // Upper triangle in column order: (0,1),(0,2),(1,2),(0,3),...
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        out.push((acc + 63) as char);
    }
    out
}

/// Parses short-form graph6. Accepts the optional `>>graph6<<` prefix and a
/// trailing newline; everything else is strict, including zero padding bits.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(1, 0, "empty graph6 string"));
    }
    if bytes[0] == 126 {
        return Err(Error::parse(
            1,
            0,
            "long-form graph6 orders (n > 62) are not supported",
        ));
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(Error::parse(1, 0, "invalid graph6 size byte"));
    }
    let n = (bytes[0] - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = 1 + bits.div_ceil(6);
    if bytes.len() < expected {
        return Err(Error::parse(
            1,
            bytes.len(),
            format!("truncated graph6 string: expected {expected} bytes"),
        ));
    }
    if bytes.len() > expected {
        return Err(Error::parse(
            1,
            expected,
            format!("trailing bytes after graph6 string of {expected} bytes"),
        ));
    }
    let mut edges = Vec::new();
    let mut byte_pos = 1;
    let mut bit_pos = 0u8;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit_pos == 0 {
                let b = bytes[byte_pos];
                if !(63..=126).contains(&b) {
                    return Err(Error::parse(1, byte_pos, "invalid graph6 data byte"));
                }
                current = b - 63;
                byte_pos += 1;
                bit_pos = 6;
            }
            bit_pos -= 1;
            if current & (1 << bit_pos) != 0 {
                edges.push((i, j));
            }
        }
    }
    if bit_pos > 0 && current & ((1 << bit_pos) - 1) != 0 {
        return Err(Error::parse(
            1,
            byte_pos - 1,
            "nonzero padding bits in graph6 string",
        ));
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}
