//! Feedback vertex set and odd cycle transversal, plain and connected, on
//! (sP1+P3)-free graphs.
//!
//! Each solver runs a fixed sequence of guessing steps. Every guess yields a
//! candidate which is validated on its own before it competes, so a step may
//! emit candidates outside the case it was designed for without harm. The
//! steps visited and their best candidates are kept in a [`CaseTrace`].
//!
//! Maximum independent set and connected vertex cover calls go through
//! [`Subroutines`](crate::oracle::Subroutines).

mod ext;
mod lemmas;
mod plain;
mod search;

pub use ext::{
    cfvs_extension_sp1p3, cfvs_extension_sp1p3_traced, cfvs_extension_sp1p3_with, coct_extension_sp1p3,
    coct_extension_sp1p3_traced, coct_extension_sp1p3_with,
};
pub use lemmas::{
    check_component_structure, component_structure_holds, connector_set, internal_vertex_bound,
};
pub use plain::{fvs_sp1p3, fvs_sp1p3_traced, fvs_sp1p3_with, oct_sp1p3, oct_sp1p3_traced, oct_sp1p3_with};

use crate::error::Result;
use crate::graph::{Graph, Problem};
use crate::pattern::{check_hfree, is_hfree, LinearForestPattern};
use crate::set::VertexSet;
use crate::solution::{transversal_order, Incumbent};

/// `max(3, 2s - 1)`.
pub fn c_of_s(s: usize) -> usize {
    (2 * s).saturating_sub(1).max(3)
}

/// The parameter `s` of the class of (sP1+P3)-free graphs and the bounds
/// derived from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClassParam {
    s: usize,
}

impl ClassParam {
    pub fn new(s: usize) -> Self {
        ClassParam { s }
    }

    pub fn s(self) -> usize {
        self.s
    }

    pub fn c(self) -> usize {
        c_of_s(self.s)
    }

    pub fn pattern(self) -> LinearForestPattern {
        LinearForestPattern::sp1_p3(self.s)
    }

    pub fn contains(self, g: &Graph) -> bool {
        is_hfree(g, &self.pattern())
    }

    /// `Err(NotInClass)` with an induced copy of the pattern.
    pub fn check(self, g: &Graph) -> Result<()> {
        check_hfree(g, &self.pattern())
    }

    /// Most internal vertices of an induced tree.
    pub fn tree_internal_bound(self) -> usize {
        4 * self.s
    }

    /// Size bound for a set connecting a vertex set inside a connected
    /// graph of the class: `2s² - 2s + 3`.
    pub fn connector_bound(self) -> usize {
        2 * self.s * self.s + 3 - 2 * self.s
    }

    pub(crate) fn lower(self) -> ClassParam {
        ClassParam { s: self.s - 1 }
    }
}

/// One step of a case analysis: how many candidates it produced and the
/// best of them (as a transversal) with the guess that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub label: &'static str,
    pub candidates: usize,
    pub best: Option<VertexSet>,
    pub provenance: Option<String>,
}

/// Steps visited by one solver run, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseTrace {
    pub problem: Problem,
    pub steps: Vec<TraceStep>,
}

impl CaseTrace {
    /// Best recorded candidate over all steps, by size then lexicographically.
    pub fn optimum(&self) -> Option<VertexSet> {
        self.steps
            .iter()
            .filter_map(|st| st.best)
            .min_by(|a, b| transversal_order(*a, *b))
    }

    pub fn candidates(&self) -> usize {
        self.steps.iter().map(|st| st.candidates).sum()
    }

    pub fn step(&self, label: &str) -> Option<&TraceStep> {
        self.steps.iter().find(|st| st.label == label)
    }
}

/// Collects candidates for a top-level solver run. Candidates are offered as
/// transversals; `valid` is checked on each before it counts.
pub(crate) struct Recorder<'a> {
    universe: VertexSet,
    valid: &'a dyn Fn(VertexSet) -> bool,
    best: Incumbent,
    trace: CaseTrace,
}

impl<'a> Recorder<'a> {
    pub fn new(problem: Problem, universe: VertexSet, valid: &'a dyn Fn(VertexSet) -> bool) -> Self {
        Recorder {
            universe,
            valid,
            best: Incumbent::default(),
            trace: CaseTrace { problem, steps: Vec::new() },
        }
    }

    pub fn begin(&mut self, label: &'static str) {
        self.trace.steps.push(TraceStep {
            label,
            candidates: 0,
            best: None,
            provenance: None,
        });
    }

    /// Size of the best transversal so far, `usize::MAX` if none.
    pub fn bound(&self) -> usize {
        self.best.size()
    }

    pub fn offer(&mut self, t: VertexSet, guess: &dyn Fn() -> String) {
        if !(self.valid)(t) {
            return;
        }
        self.best.offer(t);
        let step = self.trace.steps.last_mut().expect("begin() before offer()");
        step.candidates += 1;
        let better = match step.best {
            Some(b) => transversal_order(t, b).is_lt(),
            None => true,
        };
        if better {
            step.best = Some(t);
            step.provenance = Some(guess());
        }
    }

    pub fn finish(self) -> (Option<VertexSet>, CaseTrace) {
        (self.best.best, self.trace)
    }
}

/// Where the maximization steps send their kept sets: the recorder at the
/// top level, a plain maximum inside recursive calls.
pub(crate) trait Collector {
    fn begin(&mut self, label: &'static str);
    /// A kept set must be larger than this to improve anything.
    fn floor(&self) -> usize;
    fn offer(&mut self, kept: VertexSet, guess: &dyn Fn() -> String);
}

impl Collector for Recorder<'_> {
    fn begin(&mut self, label: &'static str) {
        Recorder::begin(self, label);
    }

    fn floor(&self) -> usize {
        self.best.best.map_or(0, |b| self.universe.len() - b.len())
    }

    fn offer(&mut self, kept: VertexSet, guess: &dyn Fn() -> String) {
        Recorder::offer(self, self.universe - kept, guess);
    }
}

/// Largest valid kept set inside `mask`.
pub(crate) struct Largest<'a> {
    mask: VertexSet,
    valid: &'a dyn Fn(VertexSet) -> bool,
    pub best: Option<VertexSet>,
}

impl<'a> Largest<'a> {
    pub fn new(mask: VertexSet, valid: &'a dyn Fn(VertexSet) -> bool) -> Self {
        Largest { mask, valid, best: None }
    }
}

impl Collector for Largest<'_> {
    fn begin(&mut self, _label: &'static str) {}

    fn floor(&self) -> usize {
        self.best.map_or(0, VertexSet::len)
    }

    fn offer(&mut self, kept: VertexSet, _guess: &dyn Fn() -> String) {
        if !kept.is_subset(self.mask) || !(self.valid)(kept) {
            return;
        }
        let better = match self.best {
            Some(b) => transversal_order(self.mask - kept, self.mask - b).is_lt(),
            None => true,
        };
        if better {
            self.best = Some(kept);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_values() {
        assert_eq!(c_of_s(0), 3);
        assert_eq!(c_of_s(1), 3);
        assert_eq!(c_of_s(2), 3);
        assert_eq!(c_of_s(3), 5);
        assert_eq!(c_of_s(4), 7);
        for s in 0..10 {
            let p = ClassParam::new(s);
            assert!(p.c() >= 3);
            if s >= 2 {
                assert_eq!(p.c(), 2 * s - 1);
            }
        }
        assert_eq!(ClassParam::new(1).connector_bound(), 3);
        assert_eq!(ClassParam::new(2).connector_bound(), 7);
    }
}
