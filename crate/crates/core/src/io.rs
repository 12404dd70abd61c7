//! graph6 and plain edge-list formats.
//!
//! graph6 follows the format shipped with nauty: a size header of 6-bit
//! groups offset by 63, then the upper triangle of the adjacency matrix in
//! column order (`(0,1), (0,2), (1,2), (0,3), ...`), zero padded to a multiple
//! of six bits. Edge lists are `n m` followed by `m` lines `u v` with 1-based
//! labels.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{label, Graph};

const BIAS: u8 = 63;
const MAX_SHORT_ORDER: usize = 62;
const HEADER_PREFIX: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("invalid graph6 character {byte:#04x} at position {position}")]
    InvalidCharacter { position: usize, byte: u8 },
    #[error("graph6 body has {found} characters, expected {expected}")]
    TruncatedBits { expected: usize, found: usize },
    #[error("graph6 body has {found} characters, expected {expected}")]
    TrailingCharacters { expected: usize, found: usize },
    #[error("graph6 padding bits are not zero")]
    NonCanonicalPadding,
}

/// A decoded graph6 line together with any non-fatal findings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph6Record {
    pub text: String,
    pub order: usize,
    pub graph: Graph,
    pub warnings: Vec<Graph6Error>,
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let group = |s: &[u8]| -> Result<usize, Graph6Error> {
        s.iter().try_fold(0usize, |acc, &b| {
            if !(BIAS..=126).contains(&b) {
                return Err(Graph6Error::MalformedHeader);
            }
            Ok(acc << 6 | (b - BIAS) as usize)
        })
    };
    match bytes {
        [] => Err(Graph6Error::MalformedHeader),
        [b'~', b'~', rest @ ..] if rest.len() >= 6 => Ok((group(&rest[..6])?, 8)),
        [b'~', b'~', ..] => Err(Graph6Error::MalformedHeader),
        [b'~', rest @ ..] if rest.len() >= 3 => Ok((group(&rest[..3])?, 4)),
        [b'~', ..] => Err(Graph6Error::MalformedHeader),
        [b, ..] => Ok((group(&[*b])?, 1)),
    }
}

/// Decode one graph6 line, collecting non-fatal padding problems as warnings.
pub fn decode_graph6(line: &str) -> Result<Graph6Record, Graph6Error> {
    let text = line.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER_PREFIX).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, header) = decode_order(bytes)?;
    let body = &bytes[header..];
    let expected = body_len(n);
    if body.len() < expected {
        return Err(Graph6Error::TruncatedBits {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingCharacters {
            expected,
            found: body.len(),
        });
    }
    let mut groups = Vec::with_capacity(body.len());
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(Graph6Error::InvalidCharacter {
                position: header + i,
                byte: b,
            });
        }
        groups.push(b - BIAS);
    }
    let bit = |k: usize| groups[k / 6] >> (5 - k % 6) & 1 == 1;

    let mut graph = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                graph.add_edge(i, j).expect("indices in range");
            }
            k += 1;
        }
    }
    let mut warnings = Vec::new();
    if (k..groups.len() * 6).any(bit) {
        warnings.push(Graph6Error::NonCanonicalPadding);
    }
    Ok(Graph6Record {
        text: text.to_string(),
        order: n,
        graph,
        warnings,
    })
}

/// Decode one graph6 line. Non-canonical padding is tolerated.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    decode_graph6(line).map(|r| r.graph)
}

/// Encode a graph as graph6 with zero padding.
///
/// Orders up to 62 use the one-byte header. Larger orders fall back to the
/// `~`-prefixed extended header so that every graph has an encoding.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + body_len(n));
    if n <= MAX_SHORT_ORDER {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + BIAS);
        }
    } else {
        out.extend_from_slice(b"~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// One line of a graph6 stream.
#[derive(Debug)]
pub struct StreamItem {
    /// 1-based line number in the input.
    pub line: usize,
    pub record: Result<Graph6Record, Graph6Error>,
}

/// Lazily decodes a newline-delimited graph6 stream. Blank lines are skipped.
pub struct Graph6Stream<R> {
    reader: R,
    line: usize,
    buf: String,
}

impl<R: BufRead> Graph6Stream<R> {
    pub fn new(reader: R) -> Self {
        Graph6Stream {
            reader,
            line: 0,
            buf: String::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Stream<R> {
    type Item = std::io::Result<StreamItem>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e)),
            }
            self.line += 1;
            let text = self.buf.trim();
            if text.is_empty() {
                continue;
            }
            return Some(Ok(StreamItem {
                line: self.line,
                record: decode_graph6(text),
            }));
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("edge list header must be `n m`")]
    MalformedHeader,
    #[error("line {line}: expected two vertex labels")]
    BadLine { line: usize },
    #[error("vertex {vertex} out of range 1..={order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCountMismatch { expected: usize, found: usize },
}

/// Parse the `n m` / `u v` edge-list format. `#` starts a comment line.
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let pair = |l: &str| -> Option<(usize, usize)> {
        let mut it = l.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(a)), Some(Ok(b)), None) => Some((a, b)),
            _ => None,
        }
    };

    let (_, header) = lines.next().ok_or(EdgeListError::MalformedHeader)?;
    let (n, m) = pair(header).ok_or(EdgeListError::MalformedHeader)?;
    let mut g = Graph::empty(n);
    let mut found = 0;
    for (line, l) in lines {
        let (u, v) = pair(l).ok_or(EdgeListError::BadLine { line })?;
        for x in [u, v] {
            if x == 0 || x > n {
                return Err(EdgeListError::OutOfRange {
                    vertex: x,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(EdgeListError::SelfLoop(u));
        }
        if !g.add_edge(u - 1, v - 1).expect("validated") {
            return Err(EdgeListError::DuplicateEdge(u, v));
        }
        found += 1;
    }
    if found != m {
        return Err(EdgeListError::EdgeCountMismatch { expected: m, found });
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", label(u), label(v)));
    }
    out
}

/// Guess the format of a text blob: an `n m` first line means an edge list.
pub fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let parts: Vec<_> = l.split_whitespace().collect();
            parts.len() == 2 && parts.iter().all(|p| p.parse::<usize>().is_ok())
        })
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_graphs() {
        let empty = parse_graph6("?").unwrap();
        assert_eq!(empty.order(), 0);
        assert_eq!(emit_graph6(&empty), "?");

        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3.order(), 3);
        assert_eq!(k3.size(), 3);
        assert_eq!(emit_graph6(&k3), "Bw");

        let p3 = parse_graph6("Bg").unwrap();
        assert_eq!(p3.labeled_edges(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::MalformedHeader));
        assert_eq!(parse_graph6("~"), Err(Graph6Error::MalformedHeader));
        assert!(matches!(
            parse_graph6("C"),
            Err(Graph6Error::TruncatedBits {
                expected: 1,
                found: 0
            })
        ));
        assert!(matches!(
            parse_graph6("Bww"),
            Err(Graph6Error::TrailingCharacters { .. })
        ));
        assert!(matches!(
            parse_graph6("B\x7f"),
            Err(Graph6Error::InvalidCharacter { position: 1, .. })
        ));
        // 'x' sets a padding bit after the three edge bits of K3.
        let rec = decode_graph6("Bx").unwrap();
        assert_eq!(rec.graph.size(), 3);
        assert_eq!(rec.warnings, vec![Graph6Error::NonCanonicalPadding]);
    }

    #[test]
    fn extended_header_roundtrip() {
        let n = 70;
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let text = emit_graph6(&g);
        assert!(text.starts_with('~'));
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn header_marker_is_ignored() {
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap().size(), 3);
    }

    #[test]
    fn edge_lists() {
        let p3 = parse_edge_list("3 2\n1 2\n2 3").unwrap();
        assert_eq!(p3.labeled_edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(parse_edge_list("3 1\n1 1"), Err(EdgeListError::SelfLoop(1)));
        assert_eq!(
            parse_edge_list("3 2\n1 2\n2 1"),
            Err(EdgeListError::DuplicateEdge(2, 1))
        );
        assert!(matches!(
            parse_edge_list("3 1\n1 4"),
            Err(EdgeListError::OutOfRange { vertex: 4, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n1 2"),
            Err(EdgeListError::EdgeCountMismatch { .. })
        ));
        assert_eq!(parse_edge_list("x"), Err(EdgeListError::MalformedHeader));
        assert_eq!(parse_edge_list(&emit_edge_list(&p3)).unwrap(), p3);
        assert!(looks_like_edge_list("# c\n3 2\n1 2"));
        assert!(!looks_like_edge_list("Bw"));
    }

    #[test]
    fn stream_reports_line_numbers() {
        let input = "Bw\n\nBg\nB\x7f\n?\n";
        let items: Vec<_> = Graph6Stream::new(input.as_bytes())
            .map(Result::unwrap)
            .collect();
        assert_eq!(items.len(), 4);
        assert_eq!(items[2].line, 4);
        assert!(items[2].record.is_err());
        assert_eq!(items.iter().filter(|i| i.record.is_ok()).count(), 3);
    }
}
