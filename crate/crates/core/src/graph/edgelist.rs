//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! 0-based vertex ids.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

pub fn write(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("missing header line".into()))?;
    let (n, m) = pair(header)?;
    let mut edges = Vec::with_capacity(m);
    for line in lines.by_ref().take(m) {
        edges.push(pair(line)?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("header announces {m} edges, found {}", edges.len())));
    }
    if let Some(extra) = lines.next() {
        return Err(Error::Parse(format!("trailing content after {m} edges: {extra:?}")));
    }
    Graph::from_edge_list(n, &edges)
}

fn pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse(format!("expected two integers, got {line:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let text = write(&g);
        assert!(text.starts_with("5 5\n0 1\n0 4\n"));
        assert_eq!(parse(&text).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse("").is_err());
        assert!(parse("3 2\n0 1\n").is_err());
        assert!(parse("3 1\n0 1\n1 2\n").is_err());
        assert!(parse("3 1\n0 x\n").is_err());
        assert!(matches!(parse("3 1\n0 3\n"), Err(Error::VertexOutOfRange { .. })));
    }
}
