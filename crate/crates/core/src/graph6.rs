//! graph6 codec (nauty's ASCII format for undirected graphs).
//!
//! Encoding is header-less. Decoding accepts an optional `>>graph6<<`
//! header and ignores trailing whitespace.

use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Largest order representable by the format.
pub const MAX_ORDER: usize = (1 << 36) - 1;

fn push_order(out: &mut String, n: usize) {
    if n < 63 {
        out.push((n as u8 + 63) as char);
    } else if n < 258_048 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= MAX_ORDER, "graph too large for graph6");
    let mut out = String::new();
    push_order(&mut out, n);
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((word + 63) as char);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((word << (6 - filled)) + 63) as char);
    }
    out
}

fn sextet(bytes: &[u8], pos: usize) -> Result<usize> {
    match bytes.get(pos) {
        None => Err(Error::Graph6 { reason: "truncated input", position: pos }),
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
        Some(_) => Err(Error::Graph6 { reason: "character outside 63..=126", position: pos }),
    }
}

pub fn decode(line: &str) -> Result<Graph> {
    let line = line.trim_end();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 { reason: "empty line", position: 0 });
    }
    let (n, mut pos) = if bytes[0] != b'~' {
        (sextet(bytes, 0)?, 1)
    } else if bytes.get(1) != Some(&b'~') {
        let mut n = 0;
        for p in 1..4 {
            n = (n << 6) | sextet(bytes, p)?;
        }
        (n, 4)
    } else {
        let mut n = 0;
        for p in 2..8 {
            n = (n << 6) | sextet(bytes, p)?;
        }
        (n, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() < pos + needed {
        return Err(Error::Graph6 { reason: "truncated payload", position: bytes.len() });
    }
    if bytes.len() > pos + needed {
        return Err(Error::Graph6 { reason: "trailing data", position: pos + needed });
    }
    let mut edges = Vec::new();
    let mut word = 0;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                word = sextet(bytes, pos)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if (word >> left) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn known_strings() {
        let star = decode("D?{").unwrap();
        assert_eq!(star.edges().collect::<Vec<_>>(), [(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(encode(&star), "D?{");
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&named::complete(4)), "C~");
        let k4 = decode("C~").unwrap();
        assert_eq!((k4.order(), k4.size()), (4, 6));
        assert_eq!(decode(">>graph6<<C~\n").unwrap(), k4);
    }

    #[test]
    fn large_order_header() {
        let g = named::cycle(100);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed() {
        assert!(matches!(decode("D?"), Err(Error::Graph6 { reason: "truncated payload", .. })));
        assert!(matches!(decode("D? "), Err(Error::Graph6 { .. })));
        assert!(matches!(decode("~?"), Err(Error::Graph6 { reason: "truncated input", .. })));
        assert!(decode("").is_err());
        assert!(decode("C~~").is_err());
    }
}
