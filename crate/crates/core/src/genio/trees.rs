//! Tree enumeration: labeled trees through Prüfer sequences, and one tree
//! per isomorphism class through rooted level sequences.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for which [`labeled_trees`] is accepted (`n^(n-2)` trees).
pub const MAX_LABELED_TREE_ORDER: usize = 10;

/// The labeled tree with Prüfer sequence `seq` on `seq.len() + 2` vertices.
pub fn prufer_decode(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&v) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::InvalidVertex { vertex: v, n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] = 0;
        degree[v] -= 1;
    }
    let last: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((last[0], last[1]));
    Graph::from_edges(n, edges)
}

/// All `n^(n-2)` labeled trees on `n` vertices, by Prüfer sequence in
/// lexicographic order.
pub fn labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > MAX_LABELED_TREE_ORDER {
        return Err(Error::SizeLimit(format!(
            "labeled tree enumeration is limited to n <= {MAX_LABELED_TREE_ORDER}, got {n}"
        )));
    }
    let len = n.saturating_sub(2);
    let total = if n < 2 { 1 } else { (n as u64).pow(len as u32) };
    Ok((0..total).map(move |mut code| {
        if n < 2 {
            return Graph::empty(n).expect("small");
        }
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = (code % n as u64) as usize;
            code /= n as u64;
        }
        prufer_decode(&seq).expect("valid sequence")
    }))
}

/// Every tree on `n` vertices up to isomorphism, possibly several times
/// (once per rooting), generated from canonical rooted level sequences.
pub fn unlabeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let mut levels: Option<Vec<usize>> = (n > 0).then(|| (0..n).collect());
    std::iter::from_fn(move || {
        let current = levels.take()?;
        levels = next_level_sequence(&current);
        Some(tree_from_levels(&current))
    })
}

/// Successor in the Beyer–Hedetniemi order, `None` after the star.
fn next_level_sequence(levels: &[usize]) -> Option<Vec<usize>> {
    let p = levels.iter().rposition(|&l| l > 1)?;
    let q = levels[..p].iter().rposition(|&l| l == levels[p] - 1)?;
    let mut next = levels.to_vec();
    for i in p..next.len() {
        next[i] = next[i - (p - q)];
    }
    Some(next)
}

fn tree_from_levels(levels: &[usize]) -> Graph {
    let edges = (1..levels.len()).map(|i| {
        let parent = (0..i).rev().find(|&j| levels[j] + 1 == levels[i]).expect("parent exists");
        (parent, i)
    });
    Graph::from_edges(levels.len(), edges).expect("valid tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prufer_counts_and_shapes() {
        assert_eq!(labeled_trees(4).unwrap().count(), 16);
        assert_eq!(labeled_trees(5).unwrap().count(), 125);
        assert!(labeled_trees(6).unwrap().all(|t| t.is_forest() && t.is_connected() && t.m() == 5));
        assert_eq!(labeled_trees(1).unwrap().count(), 1);
        let star = prufer_decode(&[0, 0, 0]).unwrap();
        assert_eq!(star.degree(0), 4);
    }

    #[test]
    fn rooted_tree_counts() {
        // Rooted unlabeled trees: 1, 1, 2, 4, 9, 20, 48, 115, 286.
        let counts: Vec<usize> = (1..=9).map(|n| unlabeled_trees(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286]);
        assert!(unlabeled_trees(12).all(|t| t.is_forest() && t.is_connected()));
    }
}
