//! Induced linear forests: pattern syntax, search for induced copies, and
//! class-membership certificates.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

/// A disjoint union of paths, given by the path orders (sorted descending).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForestPattern {
    paths: Vec<usize>,
}

impl LinearForestPattern {
    pub fn new(mut paths: Vec<usize>) -> Result<Self> {
        if paths.is_empty() || paths.contains(&0) {
            return Err(Error::Precondition(
                "a pattern needs at least one path and every path at least one vertex".into(),
            ));
        }
        paths.sort_unstable_by(|a, b| b.cmp(a));
        Ok(LinearForestPattern { paths })
    }

    /// `P_k`.
    pub fn path(k: usize) -> Self {
        Self::sp1_plus_path(0, k)
    }

    /// `sP1 + P_k`.
    pub fn sp1_plus_path(s: usize, k: usize) -> Self {
        assert!(k >= 1);
        let mut paths = vec![k];
        paths.extend(std::iter::repeat_n(1, s));
        LinearForestPattern::new(paths).expect("k >= 1")
    }

    pub fn sp1_p3(s: usize) -> Self {
        Self::sp1_plus_path(s, 3)
    }

    pub fn sp1_p5(s: usize) -> Self {
        Self::sp1_plus_path(s, 5)
    }

    /// Path orders, longest first.
    pub fn paths(&self) -> &[usize] {
        &self.paths
    }

    /// Total number of vertices.
    pub fn order(&self) -> usize {
        self.paths.iter().sum()
    }
}

impl fmt::Debug for LinearForestPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Shortest paths first, equal terms grouped: `{3,1,1}` prints as `2P1+P3`.
impl fmt::Display for LinearForestPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = self.paths.len();
        while i > 0 {
            let k = self.paths[i - 1];
            let mut count = 0;
            while i > 0 && self.paths[i - 1] == k {
                count += 1;
                i -= 1;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            if count > 1 {
                write!(f, "{count}")?;
            }
            write!(f, "P{k}")?;
        }
        Ok(())
    }
}

/// Parses `'+'`-separated terms `[c]P<k>`, e.g. `2P1+P3`, `P2+P5`, `P6`.
impl FromStr for LinearForestPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::parse(1, format!("pattern {s:?}: {msg}"));
        let mut paths = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            let (mult, len) = term
                .split_once(['P', 'p'])
                .ok_or_else(|| bad("term without 'P'"))?;
            let mult: usize = if mult.is_empty() {
                1
            } else {
                mult.parse().map_err(|_| bad("bad multiplier"))?
            };
            let len: usize = len.parse().map_err(|_| bad("bad path length"))?;
            if mult == 0 || len == 0 {
                return Err(bad("multipliers and lengths must be positive"));
            }
            paths.extend(std::iter::repeat_n(len, mult));
        }
        LinearForestPattern::new(paths)
    }
}

/// An induced copy of a pattern: one vertex list per path, in pattern order,
/// each list in path order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedCopy {
    pub paths: Vec<Vec<usize>>,
}

impl InducedCopy {
    pub fn vertices(&self) -> Vec<usize> {
        self.paths.iter().flatten().copied().collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.paths.iter().flatten().copied().collect()
    }

    /// Checks that the copy really is an induced `pattern` in `g`.
    pub fn is_valid(&self, g: &Graph, pattern: &LinearForestPattern) -> bool {
        let lens: Vec<usize> = self.paths.iter().map(Vec::len).collect();
        if lens != pattern.paths() {
            return false;
        }
        let all = self.vertices();
        if all.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let set = self.vertex_set();
        if set.len() != all.len() {
            return false;
        }
        // Edges of G[set] must be exactly the consecutive path pairs.
        let mut expected = 0;
        for p in &self.paths {
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return false;
                }
                expected += 1;
            }
        }
        g.edges_within(set) == expected
    }
}

/// Finds an induced copy of `pattern` in `g`.
///
/// Paths are placed longest first; each path is grown from its start vertex
/// along unused neighbors that avoid the closed neighborhood of everything
/// placed so far. Paths on two or more vertices are only reported with
/// `first < last`, so every copy has one canonical orientation. The search
/// order is ascending in vertex ids, so the result is deterministic.
pub fn find_induced(g: &Graph, pattern: &LinearForestPattern) -> Option<InducedCopy> {
    let mut search = Search {
        g,
        lens: pattern.paths(),
        placed: Vec::with_capacity(pattern.paths().len()),
    };
    search
        .place(0, g.vertices(), 0)
        .then(|| InducedCopy {
            paths: search.placed,
        })
}

pub fn is_hfree(g: &Graph, pattern: &LinearForestPattern) -> bool {
    find_induced(g, pattern).is_none()
}

/// `Err` carries the induced copy as a flat vertex list.
pub fn check_hfree(g: &Graph, pattern: &LinearForestPattern) -> Result<()> {
    match find_induced(g, pattern) {
        None => Ok(()),
        Some(copy) => Err(Error::NotInClass {
            pattern: pattern.clone(),
            certificate: copy.vertices(),
        }),
    }
}

/// `Some(P4)` when `g` is not a cograph.
pub fn p4_certificate(g: &Graph) -> Option<[usize; 4]> {
    find_induced(g, &LinearForestPattern::path(4)).map(|c| {
        let p = &c.paths[0];
        [p[0], p[1], p[2], p[3]]
    })
}

pub fn is_cograph(g: &Graph) -> bool {
    p4_certificate(g).is_none()
}

struct Search<'a> {
    g: &'a Graph,
    lens: &'a [usize],
    placed: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Places paths `idx..`, choosing vertices from `allowed`. For repeated
    /// single-vertex terms `min_start` keeps the choices increasing.
    fn place(&mut self, idx: usize, allowed: VertexSet, min_start: usize) -> bool {
        if idx == self.lens.len() {
            return true;
        }
        let remaining: usize = self.lens[idx..].iter().sum();
        if allowed.len() < remaining {
            return false;
        }
        let k = self.lens[idx];
        let same_as_prev = idx > 0 && self.lens[idx - 1] == k;
        let start_floor = if same_as_prev { min_start } else { 0 };
        for v in allowed - VertexSet::full(start_floor.min(128)) {
            let mut path = vec![v];
            if self.grow(idx, &mut path, allowed, allowed, v + 1) {
                return true;
            }
        }
        false
    }

    /// Extends `path` to `lens[idx]` vertices. `free` holds the allowed
    /// vertices non-adjacent to (and distinct from) every path vertex except
    /// the last.
    fn grow(
        &mut self,
        idx: usize,
        path: &mut Vec<usize>,
        allowed: VertexSet,
        free: VertexSet,
        next_floor: usize,
    ) -> bool {
        let k = self.lens[idx];
        let last = *path.last().expect("nonempty path");
        if path.len() == k {
            if k >= 2 && path[0] > last {
                return false;
            }
            let used: VertexSet = path.iter().copied().collect();
            let rest = allowed - self.g.closed_neighborhood(used);
            self.placed.push(path.clone());
            if self.place(idx + 1, rest, next_floor) {
                return true;
            }
            self.placed.pop();
            return false;
        }
        let next_free = free - self.g.closed_neighbors(last);
        for w in self.g.neighbors(last) & free {
            path.push(w);
            let ok = self.grow(idx, path, allowed, next_free, next_floor);
            path.pop();
            if ok {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn pat(s: &str) -> LinearForestPattern {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(pat("2P1+P3").paths(), &[3, 1, 1]);
        assert_eq!(pat("P2+P5").to_string(), "P2+P5");
        assert_eq!(pat("P3 + 2P1").to_string(), "2P1+P3");
        assert_eq!(pat("P6").order(), 6);
        assert!("P0".parse::<LinearForestPattern>().is_err());
        assert!("2Q3".parse::<LinearForestPattern>().is_err());
        assert!("0P1".parse::<LinearForestPattern>().is_err());
    }

    #[test]
    fn find_examples() {
        let p4 = path(4);
        let c = find_induced(&p4, &pat("P4")).unwrap();
        assert_eq!(c.paths, vec![vec![0, 1, 2, 3]]);
        assert!(find_induced(&cycle(4), &pat("P4")).is_none());
        let g = disjoint_union(&path(1), &path(3));
        let c = find_induced(&g, &pat("P1+P3")).unwrap();
        assert_eq!(c.paths, vec![vec![1, 2, 3], vec![0]]);
        assert!(c.is_valid(&g, &pat("P1+P3")));
        assert!(find_induced(&cycle(7), &pat("P2+P5")).is_none());
        assert!(find_induced(&cycle(6), &pat("P2+P5")).is_none());
    }

    #[test]
    fn hfree_examples() {
        for s in 0..4 {
            assert!(is_hfree(&complete(6), &LinearForestPattern::sp1_p3(s)));
        }
        assert!(is_hfree(&cycle(4), &pat("P1+P3")));
        let g = disjoint_union(&star(5), &path(1));
        assert!(!is_hfree(&g, &pat("P1+P3")));
    }

    #[test]
    fn cograph_examples() {
        assert_eq!(p4_certificate(&path(4)), Some([0, 1, 2, 3]));
        assert!(is_cograph(&cycle(4)));
        assert!(is_cograph(&star(3)));
        assert!(!is_cograph(&cycle(5)));
    }

    #[test]
    fn certificate_error_carries_copy() {
        let err = check_hfree(&path(5), &pat("P1+P3")).unwrap_err();
        match err {
            Error::NotInClass { certificate, .. } => assert_eq!(certificate.len(), 4),
            other => panic!("unexpected {other:?}"),
        }
    }
}
