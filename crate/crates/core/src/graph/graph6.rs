//! The graph6 text format: a size header followed by the upper triangle of
//! the adjacency matrix, column by column, packed into printable 6-bit chunks.

use thiserror::Error;

use super::Graph;

/// Optional first-line marker written by some tools.
pub const HEADER: &str = ">>graph6<<";

const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed size header: {0}")]
    MalformedHeader(String),
    #[error("invalid character {byte:#04x} at byte {position}")]
    InvalidCharacter { position: usize, byte: u8 },
    #[error("truncated adjacency data: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data: expected {expected} bytes, found {found}")]
    TrailingData { expected: usize, found: usize },
    #[error("nonzero padding bits in the final byte")]
    NonZeroPadding,
    #[error("invalid graph: {0}")]
    Graph(String),
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= MAX_SHORT {
        out.push(n as u8 + 63);
    } else if n <= MAX_MEDIUM {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let chunk = |k: usize| -> Result<usize, Graph6Error> {
        match bytes.get(k) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(Graph6Error::InvalidCharacter { position: k, byte: b }),
            None => Err(Graph6Error::MalformedHeader("size header cut short".into())),
        }
    };
    match bytes.first() {
        None => Err(Graph6Error::Empty),
        Some(&b) if (63..=125).contains(&b) => Ok(((b - 63) as usize, 1)),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                let mut n = 0usize;
                for k in 2..8 {
                    n = (n << 6) | chunk(k)?;
                }
                if n <= MAX_MEDIUM {
                    return Err(Graph6Error::MalformedHeader(format!("8-byte header for n = {n}")));
                }
                Ok((n, 8))
            } else {
                let mut n = 0usize;
                for k in 1..4 {
                    n = (n << 6) | chunk(k)?;
                }
                if n <= MAX_SHORT {
                    return Err(Graph6Error::MalformedHeader(format!("4-byte header for n = {n}")));
                }
                Ok((n, 4))
            }
        }
        Some(&b) => Err(Graph6Error::MalformedHeader(format!("first byte {b:#04x} is not a size character"))),
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` marker and trailing line
/// breaks are ignored.
pub fn decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let text = text.trim_end_matches(['\n', '\r']);
    let bytes = text.as_bytes();
    let (n, offset) = decode_size(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[offset..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData { expected, found: body.len() });
    }
    let mut values = Vec::with_capacity(expected);
    for (k, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidCharacter { position: offset + k, byte: b });
        }
        values.push(b - 63);
    }
    let pad = expected * 6 - bits;
    if pad > 0 && values[expected - 1] & ((1u8 << pad) - 1) != 0 {
        return Err(Graph6Error::NonZeroPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (values[k / 6] >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).map_err(|e| Graph6Error::Graph(e.to_string()))
}

/// Decodes every nonblank line, keeping 1-based line numbers. A first-line
/// `>>graph6<<` marker on its own is skipped.
pub fn decode_lines(text: &str) -> Vec<(usize, Result<Graph, Graph6Error>)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && l.trim() != HEADER)
        .map(|(i, l)| (i + 1, decode(l.trim())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_five_vertex_string() {
        // 0-2, 0-4, 1-3, 3-4
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn trivial_graphs() {
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(decode("@").unwrap(), Graph::empty(1));
        assert_eq!(decode(">>graph6<<@\n").unwrap(), Graph::empty(1));
    }

    #[test]
    fn complete_graph_k5() {
        let k5 = Graph::new(5, (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))).unwrap();
        assert_eq!(encode(&k5), "D~{");
    }

    #[test]
    fn medium_header() {
        let g = Graph::new(63, (0..62).map(|i| (i, i + 1))).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn distinguished_errors() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert!(matches!(decode(" D"), Err(Graph6Error::MalformedHeader(_))));
        assert!(matches!(decode("~?"), Err(Graph6Error::MalformedHeader(_))));
        assert_eq!(decode("D~"), Err(Graph6Error::Truncated { expected: 2, found: 1 }));
        assert_eq!(decode("D~{?"), Err(Graph6Error::TrailingData { expected: 2, found: 3 }));
        assert_eq!(decode("D~|"), Err(Graph6Error::NonZeroPadding));
        assert!(matches!(decode("D~ "), Err(Graph6Error::InvalidCharacter { position: 2, .. })));
        assert!(matches!(decode("~??A"), Err(Graph6Error::MalformedHeader(_))));
    }

    #[test]
    fn line_numbers_survive_errors() {
        let parsed = decode_lines(">>graph6<<\nD~{\n\nbad\n@\n");
        let lines: Vec<usize> = parsed.iter().map(|(l, _)| *l).collect();
        assert_eq!(lines, vec![2, 4, 5]);
        assert!(parsed[0].1.is_ok());
        assert!(parsed[1].1.is_err());
    }
}
