//! Graph serialization: graph6 (interchange with small-graph corpora) and a
//! human-writable edge-list format.
//!
//! graph6 encodes the upper triangle of the adjacency matrix in column order
//! (pairs (0,1), (0,2), (1,2), (0,3), ...), six bits per printable byte,
//! each byte offset by 63. Graphs on up to 62 vertices use the one-byte
//! header `63+n`; 63- and 64-vertex graphs use the standard `~` three-byte
//! header. Parsing is strict: canonical header form, exact data length and
//! zero padding bits are enforced.
//!
//! The edge list format is plain text: the first non-comment line holds the
//! vertex count, each following line one edge `u v`. Lines starting with `#`
//! are ignored. Duplicate edges are tolerated; self-loops are rejected.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} outside graph6 range 63..=126")]
    InvalidGraph6Byte { byte: u8, pos: usize },
    #[error("truncated graph6 header")]
    TruncatedHeader,
    #[error("non-canonical graph6 length field for n={0}")]
    NonCanonicalLength(usize),
    #[error("graph6 data length mismatch: expected {expected} bytes after the header, got {got}")]
    DataLength { expected: usize, got: usize },
    #[error("nonzero graph6 padding bits")]
    NonZeroPadding,
    #[error("input is not valid UTF-8")]
    NotUtf8,
    #[error("edge list is missing the vertex-count header line")]
    MissingVertexCount,
    #[error("line {line}: expected `u v`, got {text:?}")]
    BadEdgeLine { line: usize, text: String },
    #[error("line {line}: {source}")]
    BadVertexCount {
        line: usize,
        source: std::num::ParseIntError,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses a single graph in the requested format.
pub fn parse_graph(bytes: &[u8], format: GraphFormat) -> Result<Graph, FormatError> {
    match format {
        GraphFormat::Graph6 => parse_graph6(bytes),
        GraphFormat::EdgeList => parse_edgelist(bytes),
    }
}

/// Serializes a graph in the requested format.
pub fn write_graph(g: &Graph, format: GraphFormat) -> Vec<u8> {
    match format {
        GraphFormat::Graph6 => graph6_string(g).into_bytes(),
        GraphFormat::EdgeList => edgelist_string(g).into_bytes(),
    }
}

/// Upper-triangle pair order shared by graph6 and the labeled-graph
/// enumeration: index k corresponds to the k-th pair of
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
pub(crate) fn column_order_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

pub fn graph6_string(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        // three-byte length field, 18 bits big-endian
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for (i, j) in column_order_pairs(n) {
        acc = (acc << 1) | u8::from(g.has_edge(i, j));
        nbits += 1;
        if nbits == 6 {
            out.push(63 + acc);
            acc = 0;
            nbits = 0;
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)));
    }
    String::from_utf8(out).unwrap()
}

pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, FormatError> {
    let line = trim_ascii(bytes);
    if line.is_empty() {
        return Err(FormatError::Empty);
    }
    // optional ">>graph6<<" prefix used by some corpora
    let line = line.strip_prefix(b">>graph6<<").unwrap_or(line);
    for (pos, &b) in line.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::InvalidGraph6Byte { byte: b, pos });
        }
    }
    let (n, header_len) = if line[0] == 126 {
        if line.len() >= 2 && line[1] == 126 {
            // eight-byte form encodes n >= 258048, far beyond the cap
            let n = decode_base64ultra(line)?;
            return Err(GraphError::TooManyVertices(n).into());
        }
        if line.len() < 4 {
            return Err(FormatError::TruncatedHeader);
        }
        let n = (((line[1] - 63) as usize) << 12)
            | (((line[2] - 63) as usize) << 6)
            | ((line[3] - 63) as usize);
        if n <= 62 {
            return Err(FormatError::NonCanonicalLength(n));
        }
        (n, 4)
    } else {
        ((line[0] - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let data = &line[header_len..];
    if data.len() != expected {
        return Err(FormatError::DataLength {
            expected,
            got: data.len(),
        });
    }
    let mut edges = Vec::new();
    for (k, (i, j)) in column_order_pairs(n).enumerate() {
        let byte = data[k / 6] - 63;
        if (byte >> (5 - k % 6)) & 1 == 1 {
            edges.push((i, j));
        }
    }
    // padding bits past the triangle must be zero
    if nbits % 6 != 0 {
        let last = data[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(FormatError::NonZeroPadding);
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

fn decode_base64ultra(line: &[u8]) -> Result<usize, FormatError> {
    if line.len() < 8 {
        return Err(FormatError::TruncatedHeader);
    }
    let mut n = 0usize;
    for &b in &line[2..8] {
        n = (n << 6) | (b - 63) as usize;
    }
    Ok(n)
}

fn trim_ascii(bytes: &[u8]) -> &[u8] {
    let start = bytes
        .iter()
        .position(|b| !b.is_ascii_whitespace())
        .unwrap_or(bytes.len());
    let end = bytes
        .iter()
        .rposition(|b| !b.is_ascii_whitespace())
        .map_or(start, |e| e + 1);
    &bytes[start..end]
}

pub fn edgelist_string(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_edgelist(bytes: &[u8]) -> Result<Graph, FormatError> {
    let text = std::str::from_utf8(bytes).map_err(|_| FormatError::NotUtf8)?;
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match n {
            None => {
                n = Some(line.parse().map_err(|source| FormatError::BadVertexCount {
                    line: idx + 1,
                    source,
                })?);
            }
            Some(_) => {
                let mut it = line.split_whitespace();
                let (u, v) = match (it.next(), it.next(), it.next()) {
                    (Some(a), Some(b), None) => (a, b),
                    _ => {
                        return Err(FormatError::BadEdgeLine {
                            line: idx + 1,
                            text: line.to_string(),
                        })
                    }
                };
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| FormatError::BadEdgeLine {
                        line: idx + 1,
                        text: line.to_string(),
                    })
                };
                edges.push((parse(u)?, parse(v)?));
            }
        }
    }
    let n = n.ok_or(FormatError::MissingVertexCount)?;
    Ok(Graph::from_edges(n, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_of_k1_is_at_sign() {
        let g = Graph::edgeless(1).unwrap();
        assert_eq!(graph6_string(&g), "@");
        assert_eq!(parse_graph6(b"@").unwrap(), g);
    }

    #[test]
    fn graph6_known_vector() {
        // 5 vertices, edges (0,2), (0,4), (1,3), (3,4) encodes as "DQc"
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(graph6_string(&g), "DQc");
        assert_eq!(parse_graph6(b"DQc").unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_on_a_5_vertex_string() {
        let g = parse_graph6(b"D?{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(graph6_string(&g).as_bytes(), b"D?{");
    }

    #[test]
    fn graph6_empty_graph() {
        let g = Graph::edgeless(0).unwrap();
        assert_eq!(graph6_string(&g), "?");
        assert_eq!(parse_graph6(b"?").unwrap(), g);
    }

    #[test]
    fn graph6_long_form_for_63_vertices() {
        let g = Graph::from_edges(63, [(0, 62)]).unwrap();
        let s = graph6_string(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn graph6_rejects_oversized() {
        // 70-vertex header
        let s = [
            126,
            63,
            63 + ((70 >> 6) & 0x3f) as u8,
            63 + (70 & 0x3f) as u8,
        ];
        assert!(matches!(
            parse_graph6(&s),
            Err(FormatError::Graph(GraphError::TooManyVertices(70)))
        ));
    }

    #[test]
    fn graph6_rejects_non_canonical_header() {
        // long form used for n = 5
        let s = [126, 63, 63, 63 + 5, 63, 63];
        assert!(matches!(
            parse_graph6(&s),
            Err(FormatError::NonCanonicalLength(5))
        ));
    }

    #[test]
    fn graph6_rejects_bad_lengths() {
        assert!(matches!(
            parse_graph6(b"D?"),
            Err(FormatError::DataLength { expected: 2, got: 1 })
        ));
        assert!(matches!(
            parse_graph6(b"D?{{"),
            Err(FormatError::DataLength { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn graph6_rejects_nonzero_padding() {
        // K1 plus a stray data byte is a length error; a 4-vertex graph has
        // 6 triangle bits (no padding), 5 vertices have 10 bits + 2 padding.
        let mut bytes = graph6_string(&parse_graph6(b"D?{").unwrap()).into_bytes();
        let last = bytes.len() - 1;
        bytes[last] += 1; // flip lowest padding bit
        assert_eq!(parse_graph6(&bytes), Err(FormatError::NonZeroPadding));
    }

    #[test]
    fn graph6_rejects_invalid_byte() {
        assert!(matches!(
            parse_graph6(&[68, 30, 120]),
            Err(FormatError::InvalidGraph6Byte { byte: 30, pos: 1 })
        ));
    }

    #[test]
    fn edgelist_p3() {
        let g = parse_edgelist(b"3\n0 1\n1 2").unwrap();
        assert_eq!(g, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn edgelist_comments_and_duplicates() {
        let g = parse_edgelist(b"# a triangle\n3\n0 1\n1 2\n# dup below\n1 0\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn edgelist_rejects_self_loop() {
        assert!(matches!(
            parse_edgelist(b"3\n1 1\n"),
            Err(FormatError::Graph(GraphError::SelfLoop(1)))
        ));
    }

    #[test]
    fn edgelist_rejects_out_of_range() {
        assert!(matches!(
            parse_edgelist(b"3\n0 7\n"),
            Err(FormatError::Graph(GraphError::VertexOutOfRange { vertex: 7, n: 3 }))
        ));
    }

    #[test]
    fn edgelist_round_trip() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3), (1, 2)]).unwrap();
        assert_eq!(parse_edgelist(edgelist_string(&g).as_bytes()).unwrap(), g);
    }

    #[test]
    fn edgelist_bad_line_reports_line_number() {
        assert!(matches!(
            parse_edgelist(b"3\n0 1 2\n"),
            Err(FormatError::BadEdgeLine { line: 2, .. })
        ));
    }
}
