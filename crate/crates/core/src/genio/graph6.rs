//! The graph6 format.
//!
//! `N(n)` is one byte `n + 63` for `n ≤ 62` and `126` followed by three
//! 6-bit bytes otherwise. The upper triangle is read column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte (most
//! significant first), zero-padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::MAX_VERTICES;

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let bad = |msg: String| Error::parse(1, format!("graph6: {msg}"));
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b} outside the printable range 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(bad("empty input".into())),
        [126, 126, ..] => return Err(bad("graphs this large are not supported".into())),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            if n <= 62 {
                return Err(bad(format!("n = {n} must use the one-byte size form")));
            }
            (n, rest)
        }
        [126, ..] => return Err(bad("truncated size field".into())),
        [a, rest @ ..] => (*a as usize - 63, rest),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(bad("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Encodes without the optional header and without a trailing newline.
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = if n <= 62 {
        vec![n as u8 + 63]
    } else {
        vec![126, (n >> 12) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]
    };
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genio::enumerate_all_graphs;
    use crate::graph::families::*;

    #[test]
    fn known_encodings() {
        assert_eq!(parse_graph6("A_").unwrap(), complete(2));
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap(), complete(2));
        assert_eq!(serialize_graph6(&complete(2)), "A_");
        assert_eq!(serialize_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(serialize_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(serialize_graph6(&Graph::empty(2).unwrap()), "A?");
        assert_eq!(serialize_graph6(&petersen()), "IheA@GUAo");
        assert_eq!(serialize_graph6(&complete(4)), "C~");
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("A").is_err());
        assert!(parse_graph6("A__").is_err());
        assert!(parse_graph6("A`").is_err(), "padding bit set");
        assert!(parse_graph6("A\x7f").is_err());
        assert!(parse_graph6("~??~").is_err(), "truncated body");
    }

    #[test]
    fn large_size_field() {
        let g = cycle(100);
        let text = serialize_graph6(&g);
        assert!(text.starts_with('~'));
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn round_trip_all_small_graphs() {
        for n in 0..=6 {
            for g in enumerate_all_graphs(n).unwrap() {
                assert_eq!(parse_graph6(&serialize_graph6(&g)).unwrap(), g);
            }
        }
    }
}
