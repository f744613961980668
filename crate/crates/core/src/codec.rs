//! Text codecs: graph6 (the nauty/geng interchange format) and a plain
//! edge-list format for hand-written fixtures.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6 string for order {order} needs {expected} bytes, found {found}")]
    BadLength {
        order: usize,
        expected: usize,
        found: usize,
    },
    #[error("non-zero padding bits in final byte at offset {offset}")]
    DirtyPadding { offset: usize },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing
/// whitespace are tolerated.
pub fn parse_graph6(line: &str) -> Result<Graph, CodecError> {
    let trimmed = line.trim_end();
    let (skip, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if body.is_empty() {
        return Err(CodecError::Empty);
    }
    if let Some(offset) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(CodecError::BadByte {
            offset: skip + offset,
            byte: body[offset],
        });
    }
    let sixes = |bytes: &[u8]| {
        bytes
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63))
    };
    let short = |need: usize| CodecError::BadLength {
        order: 0,
        expected: need,
        found: body.len(),
    };
    let (order, start) = if body[0] != 126 {
        (usize::from(body[0] - 63), 1)
    } else if body.len() >= 2 && body[1] != 126 {
        if body.len() < 4 {
            return Err(short(4));
        }
        (sixes(&body[1..4]), 4)
    } else {
        if body.len() < 8 {
            return Err(short(8));
        }
        (sixes(&body[2..8]), 8)
    };
    let bits = order * order.saturating_sub(1) / 2;
    let expected = start + bits.div_ceil(6);
    if body.len() != expected {
        return Err(CodecError::BadLength {
            order,
            expected,
            found: body.len(),
        });
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..order {
        for i in 0..j {
            let byte = body[start + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(CodecError::DirtyPadding {
                offset: skip + expected - 1,
            });
        }
    }
    Ok(Graph::new(order, &edges)?)
}

/// Encodes a graph as a graph6 string without header or newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Decodes the plain edge-list format: a header line `order edge_count`
/// followed by one `u v` pair per line. Blank lines and `#` comments are
/// ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, CodecError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, reason: &str| CodecError::EdgeList {
        line,
        reason: reason.to_string(),
    };
    let pair = |line: usize, l: &str| -> Result<(usize, usize), CodecError> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
            _ => Err(err(line, "expected two non-negative integers")),
        }
    };
    let (hline, header) = lines.next().ok_or_else(|| err(0, "missing header"))?;
    let (order, m) = pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        edges.push(pair(line, l)?);
    }
    if edges.len() != m {
        return Err(err(
            hline,
            &format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Ok(Graph::new(order, &edges)?)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// One decoded line of a graph6 stream.
#[derive(Debug, Clone)]
pub struct StreamItem {
    /// 1-based line number in the source.
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph, CodecError>,
}

/// Reads a graph6 stream, one graph per line. Blank lines and a bare
/// `>>graph6<<` header line are skipped.
pub fn read_graph6_stream<R: BufRead>(reader: R) -> impl Iterator<Item = std::io::Result<StreamItem>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(e)),
            Ok(text) => {
                let t = text.trim();
                if t.is_empty() || t == HEADER {
                    None
                } else {
                    Some(Ok(StreamItem {
                        line: i + 1,
                        graph: parse_graph6(t),
                        text: t.to_string(),
                    }))
                }
            }
        })
}
