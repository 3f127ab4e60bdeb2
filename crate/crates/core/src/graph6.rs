//! graph6 encoding.
//!
//! Orders up to 62 use the one-byte size field; larger orders (up to
//! [`MAX_ORDER`](crate::graph::MAX_ORDER)) use the `~` + 3 byte form. Bits
//! enumerate the upper triangle column by column: `(0,1), (0,2), (1,2),
//! (0,3), ...`, packed six per byte, most significant first, offset by 63.

use thiserror::Error;

use crate::graph::{Graph, GraphError, Mask};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("malformed graph6 header")]
    BadHeader,
    #[error("byte {0:#04x} outside the graph6 range 63..=126")]
    BadByte(u8),
    #[error("graph6 payload truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 payload has {0} trailing bytes")]
    Trailing(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn check_byte(b: u8) -> Result<u8, Graph6Error> {
    if (63..=126).contains(&b) {
        Ok(b - OFFSET)
    } else {
        Err(Graph6Error::BadByte(b))
    }
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decode one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(input: &[u8]) -> Result<Graph, Graph6Error> {
    let mut bytes = input;
    while let Some((&last, rest)) = bytes.split_last() {
        if last == b'\n' || last == b'\r' {
            bytes = rest;
        } else {
            break;
        }
    }
    if let Some(rest) = bytes.strip_prefix(HEADER.as_bytes()) {
        bytes = rest;
    }
    let (&first, rest) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    let (n, payload) = if first == 126 {
        if rest.first() == Some(&126) {
            // 8-byte form: orders beyond 258047 are far outside our range.
            return Err(Graph6Error::BadHeader);
        }
        if rest.len() < 3 {
            return Err(Graph6Error::BadHeader);
        }
        let mut n = 0usize;
        for &b in &rest[..3] {
            n = (n << 6) | check_byte(b)? as usize;
        }
        if n <= 62 {
            return Err(Graph6Error::BadHeader);
        }
        (n, &rest[3..])
    } else {
        (check_byte(first)? as usize, rest)
    };
    let mut g = Graph::empty(n)?;
    let expected = payload_len(n);
    if payload.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(Graph6Error::Trailing(payload.len() - expected));
    }
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = check_byte(payload[k / 6])?;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Encode without header or trailing newline.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + payload_len(n));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row: Mask = g.row(j);
        for i in 0..j {
            acc = (acc << 1) | ((row >> i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Straight transcription of the format: build the bit string, then
    /// decode with no shared code.
    fn reference_decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let b = s.as_bytes();
        let n = (b[0] - 63) as usize;
        let mut bitstr = String::new();
        for &c in &b[1..] {
            bitstr.push_str(&format!("{:06b}", c - 63));
        }
        let chars: Vec<char> = bitstr.chars().collect();
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if chars[k] == '1' {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        (n, edges)
    }

    #[test]
    fn k4() {
        let g = parse_graph6(b"C~").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.size(), 6);
        let (n, edges) = reference_decode("C~");
        assert_eq!(g, Graph::from_edges(n, edges).unwrap());
        assert_eq!(emit_graph6(&g), "C~");
    }

    #[test]
    fn k1_and_empty() {
        let g = parse_graph6(b"@").unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
        assert_eq!(emit_graph6(&g), "@");
        assert_eq!(parse_graph6(b"?").unwrap().order(), 0);
    }

    #[test]
    fn path_matches_reference() {
        // P4 0-1-2-3: bits (0,1)=1 (0,2)=0 (1,2)=1 (0,3)=0 (1,3)=0 (2,3)=1
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let s = emit_graph6(&p4);
        assert_eq!(s, "Ch");
        let (n, edges) = reference_decode(&s);
        assert_eq!(Graph::from_edges(n, edges).unwrap(), p4);
    }

    #[test]
    fn header_and_newline() {
        assert_eq!(parse_graph6(b">>graph6<<C~\n").unwrap().size(), 6);
    }

    #[test]
    fn errors() {
        assert_eq!(parse_graph6(b""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6(b"C"),
            Err(Graph6Error::Truncated {
                expected: 1,
                found: 0
            })
        );
        assert_eq!(parse_graph6(b"C~~"), Err(Graph6Error::Trailing(1)));
        assert_eq!(parse_graph6(b" "), Err(Graph6Error::BadByte(b' ')));
        assert_eq!(parse_graph6(b"~?"), Err(Graph6Error::BadHeader));
        assert!(parse_graph6(b"~??~").is_err());
    }

    #[test]
    fn large_order_round_trip() {
        let g = Graph::from_edges(80, (0..79).map(|i| (i, i + 1))).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with("~?@O"));
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
    }
}
