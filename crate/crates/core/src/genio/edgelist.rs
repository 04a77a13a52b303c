//! Plain edge lists: a header line `n m`, then `m` lines `u v`.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses an edge list. Blank lines and lines starting with `#` are
/// skipped. Self-loops, repeated edges, out-of-range ids and an edge count
/// different from the header are errors.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
    let (n, m) = two_numbers(hline, header)?;
    let mut g = Graph::empty(n)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (line, text) in lines {
        let (u, v) = two_numbers(line, text)?;
        for x in [u, v] {
            if x >= n {
                return Err(Error::InvalidVertex { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(
            hline,
            format!("header announces {m} edges but {} were given", edges.len()),
        ));
    }
    g = Graph::from_edges(g.n(), edges)?;
    Ok(g)
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::parse(line, "expected two integers"))?;
        tok.parse()
            .map_err(|_| Error::parse(line, format!("not a non-negative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(Error::parse(line, "expected exactly two integers"));
    }
    Ok((a, b))
}

/// Canonical form: header, then edges `u v` with `u < v` in lexicographic
/// order, each line newline-terminated.
pub fn serialize_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::complete;

    #[test]
    fn parse_examples() {
        assert_eq!(parse_edgelist("2 1\n0 1").unwrap(), complete(2));
        assert_eq!(parse_edgelist("2 1\n1 1").unwrap_err(), Error::SelfLoop(1));
        assert_eq!(parse_edgelist("3 2\n0 1\n1 0").unwrap_err(), Error::DuplicateEdge(0, 1));
        assert!(matches!(parse_edgelist("2 1\n0 2"), Err(Error::InvalidVertex { vertex: 2, n: 2 })));
        assert!(matches!(parse_edgelist("3 2\n0 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edgelist("3 1\n0 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edgelist(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn canonical_round_trip() {
        let text = "4 3\n2 3\n1 0\n0 2\n";
        let g = parse_edgelist(text).unwrap();
        let canon = serialize_edgelist(&g);
        assert_eq!(canon, "4 3\n0 1\n0 2\n2 3\n");
        assert_eq!(serialize_edgelist(&parse_edgelist(&canon).unwrap()), canon);
    }
}
