//! Graph serialization: the graph6 line format and a plain edge-list format.
//!
//! graph6 packs the upper triangle of the adjacency matrix, column by column
//! ((0,1), (0,2), (1,2), (0,3), ..), into 6-bit characters offset by 63. The
//! edge-list format is a header line `n m` followed by `m` lines `u v` with
//! 0-indexed endpoints.

use crate::bitset::MAX_VERTICES;
use crate::graph::Graph;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("graph order {0} exceeds the {MAX_VERTICES}-vertex cap")]
    OrderTooLarge(usize),
    #[error("byte {0} is not a printable graph6 character")]
    InvalidCharacter(u8),
    #[error("graph6 body has {found} characters, expected {expected} for order {n}")]
    WrongLength { n: usize, expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    NonzeroPadding,
    #[error("line {line}: expected {expected}, found {found:?}")]
    Malformed {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("line {line}: vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("header announces {expected} edges but {found} edge lines follow")]
    EdgeCountMismatch { expected: usize, found: usize },
}

/// Upper-triangle vertex pairs in graph6 bit order: (0,1), (0,2), (1,2),
/// (0,3), (1,3), (2,3), ..
pub fn colex_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |v| (0..v).map(move |u| (u, v)))
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // Three-character order prefix for 63 <= n <= 258047; the cap keeps
        // us at the bottom of that range.
        out.push(b'~');
        out.push(63 + ((n >> 12) & 63) as u8);
        out.push(63 + ((n >> 6) & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut bits = 0u8;
    let mut filled = 0;
    for (u, v) in colex_pairs(n) {
        bits = (bits << 1) | u8::from(g.has_edge(u, v));
        filled += 1;
        if filled == 6 {
            out.push(63 + bits);
            bits = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(63 + (bits << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 line. The whole string must be a single graph6 value;
/// surrounding whitespace is not accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(ParseError::InvalidCharacter(b));
        }
    }
    let (n, body) = if bytes[0] == b'~' {
        if bytes.len() > 1 && bytes[1] == b'~' {
            // The eight-character order prefix only encodes orders of at
            // least 258048, hopelessly past the cap.
            return Err(ParseError::OrderTooLarge(258048));
        }
        // '~' + 3 order characters.
        if bytes.len() < 4 {
            return Err(ParseError::WrongLength {
                n: 0,
                expected: 3,
                found: bytes.len() - 1,
            });
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(ParseError::OrderTooLarge(n));
    }
    let expected = pair_count(n).div_ceil(6);
    if body.len() != expected {
        return Err(ParseError::WrongLength {
            n,
            expected,
            found: body.len(),
        });
    }
    let mut g = Graph::empty(n);
    for (i, (u, v)) in colex_pairs(n).enumerate() {
        let b = body[i / 6] - 63;
        if b >> (5 - i % 6) & 1 == 1 {
            g.add_edge(u, v);
        }
    }
    // Any bits past the last pair must be zero padding.
    let used = pair_count(n);
    if !used.is_multiple_of(6) {
        let last = body[used / 6] - 63;
        let pad_bits = 6 - used % 6;
        if last & ((1 << pad_bits) - 1) != 0 {
            return Err(ParseError::NonzeroPadding);
        }
    }
    Ok(g)
}

/// Parses the edge-list format: a header `n m`, then `m` lines `u v`.
/// Blank lines are ignored; anything else must parse exactly. Errors carry
/// 1-based line numbers.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(ParseError::Empty)?;
    let mut fields = header.split_whitespace();
    let malformed_header = || ParseError::Malformed {
        line: header_line,
        expected: "header `n m`",
        found: header.to_string(),
    };
    let n: usize = fields
        .next()
        .and_then(|f| f.parse().ok())
        .ok_or_else(malformed_header)?;
    let m: usize = fields
        .next()
        .and_then(|f| f.parse().ok())
        .ok_or_else(malformed_header)?;
    if fields.next().is_some() {
        return Err(malformed_header());
    }
    if n > MAX_VERTICES {
        return Err(ParseError::OrderTooLarge(n));
    }

    let mut g = Graph::empty(n);
    let mut found = 0;
    for (line, content) in lines {
        if found == m {
            return Err(ParseError::EdgeCountMismatch {
                expected: m,
                found: m + 1,
            });
        }
        let mut fields = content.split_whitespace();
        let malformed = || ParseError::Malformed {
            line,
            expected: "edge `u v`",
            found: content.to_string(),
        };
        let u: usize = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(malformed)?;
        let v: usize = fields
            .next()
            .and_then(|f| f.parse().ok())
            .ok_or_else(malformed)?;
        if fields.next().is_some() {
            return Err(malformed());
        }
        for w in [u, v] {
            if w >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex: w, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        g.add_edge(u, v); // duplicates are idempotent by design
        found += 1;
    }
    if found != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found,
        });
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_decodes_known_strings() {
        // "A_" is K2: order 2, single bit set.
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);

        // "D?{" has order 5 and bits 000000 111100 -> edges to vertex 4 only:
        // the star centered at 4.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn graph6_round_trips() {
        let c5 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let line = to_graph6(&c5);
        assert_eq!(parse_graph6(&line).unwrap(), c5);

        // Hand-decode the C5 bits independently of the encoder: pairs in
        // column order give 1 0 1 0 0 1 | 1 0 0 1, so after the order byte
        // the characters are 63+0b101001 and 63+0b100100 ("Dhc").
        assert_eq!(line.as_bytes(), &[63 + 5, 63 + 0b101001, 63 + 0b100100]);
        assert_eq!(line, "Dhc");

        for n in 0..7usize {
            let mut g = Graph::empty(n);
            // A deterministic scattering of edges.
            for (i, (u, v)) in colex_pairs(n).enumerate() {
                if (i * 7 + n) % 3 == 0 {
                    g.add_edge(u, v);
                }
            }
            assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g, "n={n}");
        }
    }

    #[test]
    fn graph6_edge_cases() {
        // Order 0 and 1 encode as a bare count.
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        assert_eq!(parse_graph6("@").unwrap().order(), 1);

        // Order 63 and 64 need the long prefix and still round-trip.
        for n in [63usize, 64] {
            let mut g = Graph::empty(n);
            g.add_edge(0, n - 1);
            g.add_edge(5, 6);
            let line = to_graph6(&g);
            assert!(line.starts_with('~'));
            assert_eq!(parse_graph6(&line).unwrap(), g);
        }
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert_eq!(parse_graph6(""), Err(ParseError::Empty));
        assert_eq!(parse_graph6("A_\n"), Err(ParseError::InvalidCharacter(b'\n')));
        assert_eq!(parse_graph6("A _"), Err(ParseError::InvalidCharacter(b' ')));
        // Truncated and overlong bodies.
        assert_eq!(
            parse_graph6("D?"),
            Err(ParseError::WrongLength { n: 5, expected: 2, found: 1 })
        );
        assert_eq!(
            parse_graph6("A__"),
            Err(ParseError::WrongLength { n: 2, expected: 1, found: 2 })
        );
        // Order above the cap: 65 = 0b000001_000001 encodes as "~?@@".
        assert!(matches!(
            parse_graph6("~?@@"),
            Err(ParseError::OrderTooLarge(65))
        ));
        // The eight-character order prefix is always out of range.
        assert!(matches!(
            parse_graph6("~~??????"),
            Err(ParseError::OrderTooLarge(_))
        ));
        // K2 with the pad bits misdeclared: 0b110000 instead of 0b100000.
        let line = String::from_utf8(vec![b'A', 63 + 0b110000]).unwrap();
        assert_eq!(parse_graph6(&line), Err(ParseError::NonzeroPadding));
    }

    #[test]
    fn edge_list_parses_examples() {
        let g = parse_edge_list("2 1\n0 1\n").unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);

        let g = parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!(g.vertices().all(|v| g.degree(v) == 2));

        // An isolated-vertices graph has a header and no edge lines.
        let g = parse_edge_list("3 0").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 0);

        // Blank lines anywhere are fine; duplicate edges are idempotent but
        // still count toward m.
        let g = parse_edge_list("\n3 2\n\n0 1\n0 1\n\n").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_rejects_bad_input() {
        assert_eq!(parse_edge_list(""), Err(ParseError::Empty));
        assert_eq!(parse_edge_list("   \n\n"), Err(ParseError::Empty));

        let err = parse_edge_list("2\n").unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 1, .. }), "{err}");

        let err = parse_edge_list("2 1\n0 x\n").unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 2, .. }), "{err}");

        let err = parse_edge_list("2 1\n0 1 2\n").unwrap_err();
        assert!(matches!(err, ParseError::Malformed { line: 2, .. }), "{err}");

        assert_eq!(
            parse_edge_list("2 1\n0 2\n"),
            Err(ParseError::VertexOutOfRange { line: 2, vertex: 2, n: 2 })
        );
        assert_eq!(
            parse_edge_list("3 1\n\n1 1\n"),
            Err(ParseError::SelfLoop { line: 3, vertex: 1 })
        );
        assert_eq!(
            parse_edge_list("3 2\n0 1\n"),
            Err(ParseError::EdgeCountMismatch { expected: 2, found: 1 })
        );
        assert_eq!(
            parse_edge_list("3 1\n0 1\n1 2\n"),
            Err(ParseError::EdgeCountMismatch { expected: 1, found: 2 })
        );
        assert_eq!(parse_edge_list("65 0\n"), Err(ParseError::OrderTooLarge(65)));

        // Cap enforcement happens during parsing, not graph construction.
        let err = parse_edge_list("70 1\n0 1\n").unwrap_err();
        assert_eq!(err, ParseError::OrderTooLarge(70));
    }
}
