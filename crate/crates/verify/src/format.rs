//! Text encodings of graphs: graph6 and a plain edge list.
//!
//! graph6 packs the order into a header (`n + 63` for `n <= 62`, otherwise `~`
//! followed by 18 or 36 bits) and then the upper triangle of the adjacency
//! matrix column by column, in the order `(0,1), (0,2), (1,2), (0,3), ...`.
//! Six bits go in each byte, offset by 63; the last byte is zero-padded.

use inertia_core::graph::MAX_VERTICES;
use inertia_core::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("graph6 byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, reason: &'static str) -> FormatError {
    FormatError::Graph6 { offset, reason }
}

/// Parses one graph6 line. A trailing newline and the optional `>>graph6<<`
/// marker are accepted; offsets in errors are relative to the given text.
pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (base, body) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(g6_err(base + pos, "character outside 63..=126"));
    }
    let six = |b: u8| u64::from(b - 63);

    let (n, header_len) = match body {
        [] => return Err(g6_err(base, "missing order header")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(g6_err(base + body.len(), "truncated 36-bit order header"));
            }
            (rest[..6].iter().fold(0, |acc, &b| acc << 6 | six(b)), 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(g6_err(base + body.len(), "truncated 18-bit order header"));
            }
            (rest[..3].iter().fold(0, |acc, &b| acc << 6 | six(b)), 4)
        }
        [b, ..] => (six(*b), 1),
    };
    if n > MAX_VERTICES as u64 {
        return Err(g6_err(base, "order exceeds the supported maximum of 64000"));
    }
    let n = n as usize;
    let payload = &body[header_len..];
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if payload.len() != expected {
        return Err(g6_err(
            base + header_len + payload.len().min(expected),
            "payload length does not match the order",
        ));
    }

    let bit = |k: usize| ((payload[k / 6] - 63) >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (bits..expected * 6).any(bit) {
        return Err(g6_err(
            base + header_len + expected - 1,
            "nonzero padding bits",
        ));
    }
    Graph::from_edges(n, edges).map_err(|_| g6_err(base, "invalid graph"))
}

/// Canonical graph6 encoding (no marker, no newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|s| (n >> (6 * s) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| (n >> (6 * s) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses `n` followed by one `u v` pair per line. Blank lines and `#`
/// comments are skipped; repeated edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let err = |line: usize, reason: String| FormatError::EdgeList { line, reason };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let Some((first, header)) = lines.next() else {
        return Err(err(1, "missing vertex count".into()));
    };
    let n: usize = header
        .parse()
        .map_err(|_| err(first, format!("expected a vertex count, found {header:?}")))?;
    if n > MAX_VERTICES {
        return Err(err(
            first,
            format!("{n} vertices exceeds the maximum of {MAX_VERTICES}"),
        ));
    }

    let mut edges = Vec::new();
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = fields[..] else {
            return Err(err(
                no,
                format!("expected two vertex indices, found {line:?}"),
            ));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(no, format!("{s:?} is not a vertex index")))
        };
        let (u, v) = (parse(u)?, parse(v)?);
        if u >= n || v >= n {
            return Err(err(no, format!("vertex {} out of range 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(err(no, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, edges).map_err(|e| err(0, e.to_string()))
}

/// Edge-list text for `g`, the inverse of [`parse_edge_list`].
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for e in g.edges() {
        let (u, v) = e.endpoints();
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
