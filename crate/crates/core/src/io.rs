//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! 0-based ids. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Non-empty, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_numbers<const N: usize>(line: usize, text: &str) -> Result<[usize; N]> {
    let mut out = [0; N];
    let mut fields = text.split_whitespace();
    for slot in out.iter_mut() {
        let field = fields.next().ok_or_else(|| Error::Parse {
            line,
            msg: format!("expected {N} integers"),
        })?;
        *slot = field.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("not a non-negative integer: {field:?}"),
        })?;
    }
    if fields.next().is_some() {
        return Err(Error::Parse {
            line,
            msg: format!("expected exactly {N} integers"),
        });
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_numbers::<2>(line, header)?;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::with_capacity(m);
    for (line, text) in lines {
        let [u, v] = parse_numbers::<2>(line, text)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: 1,
            msg: format!("header announces {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.vertex_count(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# c4\n4 4\n0 1\n1 2\n\n# x\n2 3\n3 0\n").unwrap();
        assert_eq!(g, Graph::cycle(4));
    }

    #[test]
    fn round_trip_is_canonical() {
        let text = write_edge_list(&Graph::cycle(5));
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(write_edge_list(&parse_edge_list(&text).unwrap()), text);
    }

    #[test]
    fn reports_bad_input() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert_eq!(parse_edge_list("3 1\n1 1\n"), Err(Error::SelfLoop(1)));
    }
}
