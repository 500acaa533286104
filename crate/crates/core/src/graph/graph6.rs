//! graph6 encoding, as used by nauty and friends.
//!
//! Header `N(n)` is one byte `n + 63` for `n <= 62` and `126` followed by three
//! 6-bit big-endian groups for larger `n`. The payload packs the upper triangle
//! column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), six bits per byte,
//! each byte offset by 63, zero-padded at the end.

use super::{bit, Graph, MAX_ORDER};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const HEADER: &[u8] = b">>graph6<<";

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(2 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    // Every byte lies in 63..=126, so this is ASCII.
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decodes one graph6 record. A leading `>>graph6<<` header and a single
/// trailing newline are tolerated.
pub fn decode_graph6(input: &[u8]) -> Result<Graph> {
    let mut start = 0;
    if input.starts_with(HEADER) {
        start = HEADER.len();
    }
    let mut end = input.len();
    if end > start && input[end - 1] == b'\n' {
        end -= 1;
        if end > start && input[end - 1] == b'\r' {
            end -= 1;
        }
    }
    let data = &input[start..end];
    let err = |pos: usize, reason| Error::Graph6 {
        offset: start + pos,
        reason,
    };

    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside the printable range 63..=126"));
        }
    }
    let (n, header_len) = match data.first() {
        None => return Err(err(0, "empty input")),
        Some(&126) => {
            if data.get(1) == Some(&126) {
                return Err(err(1, "order exceeds the supported maximum"));
            }
            if data.len() < 4 {
                return Err(err(data.len(), "truncated order header"));
            }
            let n = data[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - OFFSET) as usize);
            if n <= 62 {
                return Err(err(0, "non-minimal order header"));
            }
            (n, 4)
        }
        Some(&b) => ((b - OFFSET) as usize, 1),
    };
    if n > MAX_ORDER {
        return Err(err(0, "order exceeds the supported maximum"));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let payload = &data[header_len..];
    if payload.len() < expected {
        return Err(err(data.len(), "truncated edge payload"));
    }
    if payload.len() > expected {
        return Err(err(
            header_len + expected,
            "trailing bytes after edge payload",
        ));
    }

    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = payload[k / 6] - OFFSET;
            if byte & (0x20 >> (k % 6)) != 0 {
                rows[i] |= bit(j);
                rows[j] |= bit(i);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = payload[expected - 1] - OFFSET;
        let pad_mask = (1u8 << (6 - nbits % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(err(header_len + expected - 1, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_is_question_mark() {
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(decode_graph6(b"?").unwrap(), Graph::empty(0).unwrap());
    }

    #[test]
    fn known_vectors() {
        // Same graph petgraph tests against.
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode_graph6(&g), "DQc");
        assert_eq!(encode_graph6(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(encode_graph6(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(decode_graph6(b"DQc\n").unwrap(), g);
        assert_eq!(
            decode_graph6(b">>graph6<<C~").unwrap(),
            Graph::complete(4).unwrap()
        );
    }

    #[test]
    fn long_header() {
        let g = Graph::cycle(64).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(decode_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            decode_graph6(b"garbage\x01"),
            Err(Error::Graph6 { offset: 7, .. })
        ));
        assert!(matches!(
            decode_graph6(b""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        // C needs one payload byte.
        assert!(matches!(decode_graph6(b"C"), Err(Error::Graph6 { .. })));
        assert!(matches!(
            decode_graph6(b"C~~"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        // A_ is K2; A` sets a padding bit.
        assert!(matches!(
            decode_graph6(b"A`"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            decode_graph6(b"~~??????????"),
            Err(Error::Graph6 { .. })
        ));
    }
}
