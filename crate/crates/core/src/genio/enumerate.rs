//! All labeled graphs on a small vertex set.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `n` accepted by [`enumerate_all_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Iterator over the `2^(n(n-1)/2)` labeled graphs on `n` vertices.
///
/// Graph number `i` has edge `(u, v)` exactly when bit `k` of `i` is set,
/// where `(u, v)` is the `k`-th pair `u < v` in lexicographic order.
#[derive(Clone, Debug)]
pub struct AllGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl AllGraphs {
    pub fn len(&self) -> u64 {
        self.end
    }

    pub fn is_empty(&self) -> bool {
        self.end == 0
    }

    /// The graph with index `code` in the enumeration order.
    pub fn graph(&self, code: u64) -> Graph {
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| code >> k & 1 == 1)
            .map(|(_, &p)| p);
        Graph::from_edges(self.n, edges).expect("pairs are in range")
    }
}

impl Iterator for AllGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = self.graph(self.next);
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for AllGraphs {}

pub fn enumerate_all_graphs(n: usize) -> Result<AllGraphs> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::SizeLimit(format!(
            "exhaustive enumeration is limited to n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Ok(AllGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_all_graphs(2).unwrap().count(), 2);
        assert_eq!(enumerate_all_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_all_graphs(4).unwrap().count(), 64);
        assert_eq!(enumerate_all_graphs(0).unwrap().count(), 1);
        assert_eq!(enumerate_all_graphs(8).unwrap().len(), 1 << 28);
        assert!(enumerate_all_graphs(9).is_err());
    }

    #[test]
    fn order_is_by_edge_bits() {
        let all: Vec<Graph> = enumerate_all_graphs(3).unwrap().collect();
        assert_eq!(all[0].m(), 0);
        assert!(all[1].has_edge(0, 1) && all[1].m() == 1);
        assert!(all[2].has_edge(0, 2) && all[2].m() == 1);
        assert!(all[4].has_edge(1, 2) && all[4].m() == 1);
        assert_eq!(all[7].m(), 3);
    }
}
