//! Reading graphs and vertex lists from files or standard input.

use std::fs;
use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use sha2::{Digest, Sha256};
use transversal_core::genio::{parse_edgelist, parse_graph6, serialize_edgelist, serialize_graph6};
use transversal_core::{Error, Graph, Result, VertexSet};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Edge list when the first data line holds two numbers, graph6 otherwise.
    #[default]
    Auto,
    Edgelist,
    Graph6,
}

pub fn read_text(path: &Path) -> std::io::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path)
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    let format = match format {
        Format::Auto => {
            let first = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with('#'))
                .unwrap_or("");
            if first.split_whitespace().count() == 2 {
                Format::Edgelist
            } else {
                Format::Graph6
            }
        }
        f => f,
    };
    match format {
        Format::Graph6 => parse_graph6(text),
        _ => parse_edgelist(text),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => serialize_graph6(g) + "\n",
        _ => serialize_edgelist(g),
    }
}

/// Vertex ids separated by whitespace or commas; `#` starts a comment.
pub fn parse_vertex_list(text: &str, n: usize) -> Result<VertexSet> {
    let mut set = VertexSet::EMPTY;
    for (i, line) in text.lines().enumerate() {
        let data = line.split('#').next().unwrap_or("");
        for tok in data.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let v: usize = tok.parse().map_err(|_| Error::Parse {
                line: i + 1,
                message: format!("not a vertex id: {tok:?}"),
            })?;
            if v >= n {
                return Err(Error::InvalidVertex { vertex: v, n });
            }
            set.insert(v);
        }
    }
    Ok(set)
}

/// SHA-256 of the canonical edge list.
pub fn digest(g: &Graph) -> String {
    let hash = Sha256::digest(serialize_edgelist(g).as_bytes());
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_format() {
        let k2 = parse_graph("# c\n2 1\n0 1\n", Format::Auto).unwrap();
        assert_eq!((k2.n(), k2.m()), (2, 1));
        assert_eq!(parse_graph("A_\n", Format::Auto).unwrap(), k2);
        assert!(parse_graph("A_", Format::Edgelist).is_err());
    }

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_vertex_list("0, 2\n# x\n3", 4).unwrap(), VertexSet::from_slice(&[0, 2, 3]));
        assert!(parse_vertex_list("4", 4).is_err());
        assert!(parse_vertex_list("a", 4).is_err());
        assert!(parse_vertex_list("", 4).unwrap().is_empty());
    }

    #[test]
    fn digest_is_canonical() {
        let a = parse_graph("2 1\n1 0\n", Format::Edgelist).unwrap();
        let b = parse_graph("A_", Format::Graph6).unwrap();
        assert_eq!(digest(&a), digest(&b));
        assert!(digest(&a).starts_with("sha256:"));
    }
}
