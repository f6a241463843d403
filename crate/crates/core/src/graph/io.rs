//! Plain-text graph format.
//!
//! ```text
//! n 5
//! # label 0 blob 0
//! 0 3
//! 0 4
//! ```
//!
//! The first non-comment line is `n <count>`. Every other non-comment line is
//! an edge `u v` with 0-based endpoints. Lines starting with `# label v `
//! attach a label to `v`; any other `#` line is ignored. The writer emits the
//! header, then labels by vertex, then edges with `u < v` in ascending
//! lexicographic order, so `write(parse(write(g))) == write(g)`.

use std::fmt::Write as _;

use thiserror::Error;

use super::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("missing `n <count>` header")]
    MissingHeader,
    #[error("malformed header `{0}`")]
    BadHeader(String),
    #[error("malformed edge line `{0}`")]
    BadEdge(String),
    #[error("malformed label line `{0}`")]
    BadLabel(String),
    #[error("vertex {0} out of range")]
    OutOfRange(usize),
    #[error("self-loop at {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    Duplicate(usize, usize),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut pending_labels: Vec<(usize, usize, String)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim_end_matches('\r');
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(label) = rest.strip_prefix(" label ") {
                let (v, text) = label
                    .split_once(' ')
                    .map(|(v, t)| (v, t.to_string()))
                    .unwrap_or((label, String::new()));
                let v: usize = v
                    .parse()
                    .map_err(|_| err(line_no, ParseErrorKind::BadLabel(line.into())))?;
                pending_labels.push((line_no, v, text));
            }
            continue;
        }
        if line.trim().is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match graph {
            None => {
                let n = match (tokens.next(), tokens.next(), tokens.next()) {
                    (Some("n"), Some(count), None) => count.parse::<usize>().ok(),
                    _ => None,
                };
                let n = n.ok_or_else(|| err(line_no, ParseErrorKind::BadHeader(line.into())))?;
                graph = Some(Graph::empty(n));
            }
            Some(ref mut g) => {
                let parsed = match (tokens.next(), tokens.next(), tokens.next()) {
                    (Some(a), Some(b), None) => {
                        a.parse::<usize>().ok().zip(b.parse::<usize>().ok())
                    }
                    _ => None,
                };
                let (u, v) =
                    parsed.ok_or_else(|| err(line_no, ParseErrorKind::BadEdge(line.into())))?;
                for w in [u, v] {
                    if w >= g.n() {
                        return Err(err(line_no, ParseErrorKind::OutOfRange(w)));
                    }
                }
                if u == v {
                    return Err(err(line_no, ParseErrorKind::SelfLoop(u)));
                }
                if g.has_edge(u, v) {
                    return Err(err(line_no, ParseErrorKind::Duplicate(u, v)));
                }
                g.set_edge(u, v);
            }
        }
    }

    let mut g = graph.ok_or_else(|| err(last_line.max(1), ParseErrorKind::MissingHeader))?;
    for (line_no, v, text) in pending_labels {
        if v >= g.n() {
            return Err(err(line_no, ParseErrorKind::OutOfRange(v)));
        }
        g.set_label(v, text);
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.n()).unwrap();
    for v in 0..g.n() {
        if let Some(label) = g.label(v) {
            writeln!(out, "# label {v} {label}").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::builders::build_theorem2_h;
    use proptest::prelude::*;

    #[test]
    fn parses_simple_file() {
        let g = parse_graph("n 3\n0 1\n# a comment\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn labelled_roundtrip_is_bit_exact() {
        let h = build_theorem2_h(1, 4).unwrap();
        let text = write_graph(&h);
        let back = parse_graph(&text).unwrap();
        assert_eq!(back, h);
        assert_eq!(write_graph(&back), text);
        assert!(text.starts_with("n 10\n# label 0 blob 2\n"));
    }

    #[test]
    fn error_names_the_line() {
        let e = parse_graph("n 4\n0 1\n1 x\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(e.kind, ParseErrorKind::BadEdge(_)));

        assert_eq!(
            parse_graph("n 2\n0 2\n").unwrap_err(),
            err(2, ParseErrorKind::OutOfRange(2))
        );
        assert_eq!(
            parse_graph("n 2\n1 1\n").unwrap_err(),
            err(2, ParseErrorKind::SelfLoop(1))
        );
        assert_eq!(
            parse_graph("n 2\n0 1\n1 0\n").unwrap_err(),
            err(3, ParseErrorKind::Duplicate(1, 0))
        );
        assert_eq!(
            parse_graph("").unwrap_err().kind,
            ParseErrorKind::MissingHeader
        );
        assert!(matches!(
            parse_graph("m 3\n").unwrap_err().kind,
            ParseErrorKind::BadHeader(_)
        ));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..12)
            .prop_flat_map(|n| {
                let pairs = n * n.saturating_sub(1) / 2;
                (
                    Just(n),
                    proptest::collection::vec(any::<bool>(), pairs),
                    proptest::collection::vec(proptest::option::of("[a-z0-9 ]{0,8}"), n),
                )
            })
            .prop_map(|(n, mask, labels)| {
                let mut g = Graph::empty(n);
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if mask[k] {
                            g.set_edge(u, v);
                        }
                        k += 1;
                    }
                }
                for (v, l) in labels.into_iter().enumerate() {
                    if let Some(l) = l {
                        g.set_label(v, l);
                    }
                }
                g
            })
    }

    proptest! {
        #[test]
        fn write_then_parse_roundtrips(g in arb_graph()) {
            let text = write_graph(&g);
            let back = parse_graph(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(write_graph(&back), text);
        }
    }
}
