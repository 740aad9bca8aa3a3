//! graph6 reading and writing (header-less form).
//!
//! The vertex count is one byte `n + 63` for `n <= 62`, otherwise `~`
//! followed by three 6-bit groups. The upper triangle follows column by
//! column (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per byte, most
//! significant bit first, each group offset by 63 and the last one padded
//! with zeros.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("invalid graph6 character {byte:#04x} at byte {position}")]
    InvalidCharacter { position: usize, byte: u8 },
    #[error("truncated graph6 payload: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 payload has {extra} trailing bytes")]
    TrailingData { extra: usize },
    #[error("nonzero padding bits in the last graph6 byte")]
    NonzeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const HEADER: &str = ">>graph6<<";

fn value(position: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Graph6Error::InvalidCharacter { position, byte })
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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

/// Parses one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, body_start) = if bytes[0] != 126 {
        (value(0, bytes[0])? as usize, 1)
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::Truncated { expected: 4, found: bytes.len() });
        }
        if bytes[1] == 126 {
            // eight-byte form, only needed for n > 258047
            return Err(GraphError::TooManyVertices(usize::MAX).into());
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            n = (n << 6) | value(i + 1, b)? as usize;
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected: body_start + expected,
            found: bytes.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData { extra: body.len() - expected });
    }
    let mut groups = Vec::with_capacity(expected);
    for (i, &b) in body.iter().enumerate() {
        groups.push(value(body_start + i, b)?);
    }
    let bit = |k: usize| (groups[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding);
    }
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
    Ok(Graph::from_edges(n, edges)?)
}
