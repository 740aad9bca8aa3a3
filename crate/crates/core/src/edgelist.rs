//! Plain-text edge lists: a header line `n m` followed by `m` lines `u v`.
//! Lines starting with `#` and blank lines are ignored.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct EdgeListError {
    /// 1-based line number; for a missing-edge error this is the last line.
    pub line: usize,
    pub kind: EdgeListErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListErrorKind {
    #[error("missing header line `n m`")]
    MissingHeader,
    #[error("malformed header, expected `n m`")]
    MalformedHeader,
    #[error("malformed edge, expected `u v`")]
    MalformedEdge,
    #[error("endpoint {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("header announces {expected} edges but {found} were listed")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("{0} vertices exceed the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
}

fn two_numbers(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    it.next().is_none().then_some((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line, kind| EdgeListError { line, kind };

    let (hline, header) = lines.next().ok_or(err(0, EdgeListErrorKind::MissingHeader))?;
    let (n, m) = two_numbers(header).ok_or(err(hline, EdgeListErrorKind::MalformedHeader))?;
    if n > MAX_VERTICES {
        return Err(err(hline, EdgeListErrorKind::TooManyVertices(n)));
    }

    let mut edges = Vec::with_capacity(m);
    let mut last = hline;
    for (lno, line) in lines {
        last = lno;
        let (u, v) = two_numbers(line).ok_or(err(lno, EdgeListErrorKind::MalformedEdge))?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(err(lno, EdgeListErrorKind::OutOfRange { vertex, n }));
            }
        }
        if u == v {
            return Err(err(lno, EdgeListErrorKind::SelfLoop(u)));
        }
        edges.push((u, v));
        if edges.len() > m {
            return Err(err(
                lno,
                EdgeListErrorKind::EdgeCountMismatch { expected: m, found: edges.len() },
            ));
        }
    }
    if edges.len() != m {
        return Err(err(
            last,
            EdgeListErrorKind::EdgeCountMismatch { expected: m, found: edges.len() },
        ));
    }
    Graph::from_edges(n, edges).map_err(|e| match e {
        GraphError::TooManyVertices(n) => err(hline, EdgeListErrorKind::TooManyVertices(n)),
        other => unreachable!("edges were validated above: {other}"),
    })
}

/// Renders `g` as an edge list, optionally preceded by one `# ...` comment
/// line per entry of `comments`.
pub fn to_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("{} {}\n", g.n(), g.edge_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        let k3 = parse_edge_list("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(k3, Graph::complete(3).unwrap());
        let e4 = parse_edge_list("4 0").unwrap();
        assert_eq!(e4, Graph::empty(4).unwrap());
        let c5 = parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0").unwrap();
        assert_eq!((c5.edge_count(), c5.triangle_count()), (5, 0));
    }

    #[test]
    fn comments_and_duplicates() {
        let g = parse_edge_list("# a comment\n3 3\n0 1\n\n# mid\n1 0\n1 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn errors_name_the_line() {
        let e = parse_edge_list("3 x\n").unwrap_err();
        assert_eq!((e.line, e.kind), (1, EdgeListErrorKind::MalformedHeader));
        let e = parse_edge_list("# c\n3 2\n0 1\n0 3\n").unwrap_err();
        assert_eq!((e.line, e.kind), (4, EdgeListErrorKind::OutOfRange { vertex: 3, n: 3 }));
        let e = parse_edge_list("3 1\n2 2\n").unwrap_err();
        assert_eq!((e.line, e.kind), (2, EdgeListErrorKind::SelfLoop(2)));
        let e = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert_eq!(e.kind, EdgeListErrorKind::EdgeCountMismatch { expected: 2, found: 1 });
        let e = parse_edge_list("3 1\n0 1\n1 2\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = parse_edge_list("3 1\n0 1 2\n").unwrap_err();
        assert_eq!(e.kind, EdgeListErrorKind::MalformedEdge);
        let e = parse_edge_list("   \n# only comments\n").unwrap_err();
        assert_eq!(e.kind, EdgeListErrorKind::MissingHeader);
        let e = parse_edge_list("65 0\n").unwrap_err();
        assert_eq!(e.kind, EdgeListErrorKind::TooManyVertices(65));
    }

    #[test]
    fn writer_round_trips() {
        let g = parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0").unwrap();
        let text = to_edge_list(&g, &["family=cycle".to_string()]);
        assert!(text.starts_with("# family=cycle\n5 5\n0 1\n0 4\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }
}
