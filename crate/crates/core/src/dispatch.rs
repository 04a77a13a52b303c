//! Picks a solver for a transversal problem: certify the input against a
//! graph class, run the matching specialized algorithm, the exact oracle,
//! or both.

use std::fmt;
use std::str::FromStr;

use crate::cograph;
use crate::error::{Error, Result};
use crate::genio::GraphClass;
use crate::graph::{Graph, Problem, Target};
use crate::oracle::{self, ExactSubroutines};
use crate::pattern::find_induced;
use crate::set::VertexSet;
use crate::solution::TransversalSolution;
use crate::sp1p3;

/// Largest `s` tried when the class is detected automatically.
pub const AUTO_MAX_S: usize = 3;

/// The transversal problems accepted by [`solve`].
pub const SOLVABLE: [Problem; 6] = [
    Problem::Vc,
    Problem::CvcExt,
    Problem::Fvs,
    Problem::CfvsExt,
    Problem::Oct,
    Problem::CoctExt,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassChoice {
    Auto,
    Fixed(GraphClass),
}

/// `auto`, or any class accepted by `GraphClass::from_str`.
impl FromStr for ClassChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "auto" {
            return Ok(ClassChoice::Auto);
        }
        Ok(ClassChoice::Fixed(s.parse()?))
    }
}

impl fmt::Display for ClassChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassChoice::Auto => f.write_str("auto"),
            ClassChoice::Fixed(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EngineChoice {
    /// Specialized when the input is certified in a supported class,
    /// otherwise the oracle.
    #[default]
    Auto,
    Specialized,
    Oracle,
    /// Both, failing with `Error::EngineMismatch` if the optima differ.
    Both,
}

impl FromStr for EngineChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(EngineChoice::Auto),
            "specialized" => Ok(EngineChoice::Specialized),
            "oracle" => Ok(EngineChoice::Oracle),
            "both" => Ok(EngineChoice::Both),
            _ => Err(Error::parse(1, format!("unknown engine {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algorithm {
    Specialized,
    Oracle,
    Both,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Specialized => "specialized",
            Algorithm::Oracle => "oracle",
            Algorithm::Both => "both",
        }
    }
}

/// A class that was tried and rejected, with an induced copy of its
/// forbidden pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub class: GraphClass,
    pub witness: Vec<usize>,
}

/// Which class the input was certified in, and which were ruled out.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCertificate {
    pub requested: ClassChoice,
    pub certified: Option<GraphClass>,
    pub rejected: Vec<Rejection>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    /// `None` when no transversal satisfies the constraints.
    pub solution: Option<TransversalSolution>,
    pub algorithm: Algorithm,
    pub class: ClassCertificate,
}

fn candidates(problem: Problem) -> Vec<GraphClass> {
    match problem {
        Problem::Vc => vec![GraphClass::Cograph],
        Problem::CvcExt => (0..=AUTO_MAX_S).map(GraphClass::Sp1P5Free).collect(),
        _ => std::iter::once(GraphClass::Cograph)
            .chain((1..=AUTO_MAX_S).map(GraphClass::Sp1P3Free))
            .collect(),
    }
}

fn supported(problem: Problem, class: GraphClass) -> bool {
    match class {
        GraphClass::Cograph => true,
        GraphClass::Sp1P3Free(_) => problem != Problem::Vc,
        GraphClass::Sp1P5Free(_) => problem == Problem::CvcExt,
        GraphClass::Any | GraphClass::Bipartite => false,
    }
}

/// Certifies `g` against the requested class, or against the candidates for
/// `problem` in order when the choice is automatic.
pub fn certify(g: &Graph, problem: Problem, choice: ClassChoice) -> ClassCertificate {
    let list = match choice {
        ClassChoice::Auto => candidates(problem),
        ClassChoice::Fixed(c) => vec![c],
    };
    let mut cert = ClassCertificate {
        requested: choice,
        certified: None,
        rejected: Vec::new(),
    };
    for class in list {
        let witness = match class.pattern() {
            Some(p) => find_induced(g, &p).map(|c| c.vertices()),
            None if class.contains(g) => None,
            None => Some(Vec::new()),
        };
        match witness {
            None => {
                cert.certified = Some(class);
                break;
            }
            Some(witness) => cert.rejected.push(Rejection { class, witness }),
        }
    }
    cert
}

fn check_problem(problem: Problem) -> Result<()> {
    if SOLVABLE.contains(&problem) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{problem} is not a transversal problem")))
    }
}

/// Exact oracle answer; `Ok(None)` when infeasible.
pub fn solve_oracle(g: &Graph, problem: Problem, w: VertexSet) -> Result<Option<TransversalSolution>> {
    check_problem(problem)?;
    let base = Problem::transversal(problem.target(), false);
    feasible(oracle::min_extension(base, g, w, problem.is_connected()))
}

fn feasible(r: Result<TransversalSolution>) -> Result<Option<TransversalSolution>> {
    match r {
        Ok(sol) => Ok(Some(sol)),
        Err(Error::Infeasible(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Specialized answer for a graph already known to lie in `class`.
pub fn solve_specialized(
    g: &Graph,
    problem: Problem,
    w: VertexSet,
    class: GraphClass,
) -> Result<Option<TransversalSolution>> {
    check_problem(problem)?;
    g.check_set(w)?;
    if !supported(problem, class) {
        return Err(Error::Precondition(format!(
            "no specialized algorithm for {problem} on {class} graphs"
        )));
    }
    if let Some(p) = class.pattern() {
        if let Some(c) = find_induced(g, &p) {
            return Err(Error::NotInClass {
                pattern: p,
                certificate: c.vertices(),
            });
        }
    }
    let r = match (problem, class) {
        (Problem::CfvsExt, GraphClass::Cograph) => cograph::cfvs_extension_p4free(g, w),
        (Problem::CoctExt, GraphClass::Cograph) => cograph::coct_extension_p4free(g, w),
        (Problem::CfvsExt, GraphClass::Sp1P3Free(s)) => sp1p3::cfvs_extension_sp1p3(g, w, s),
        (Problem::CoctExt, GraphClass::Sp1P3Free(s)) => sp1p3::coct_extension_sp1p3(g, w, s),
        (Problem::CvcExt, GraphClass::Cograph) => cvc(g, w, 0),
        (Problem::CvcExt, GraphClass::Sp1P3Free(s) | GraphClass::Sp1P5Free(s)) => cvc(g, w, s),
        _ => without_required(g, problem, w, class),
    };
    feasible(r)
}

/// `W` plus a plain solution of `G - W`, which stays in the class.
fn without_required(g: &Graph, problem: Problem, w: VertexSet, class: GraphClass) -> Result<TransversalSolution> {
    let (h, map) = g.induced_subgraph(g.vertices() - w)?;
    let sol = match (problem, class) {
        (Problem::Vc, _) => cograph::max_independent_set_cotree(&h)?.complement_in(&h),
        (Problem::Fvs, GraphClass::Cograph) => cograph::min_fvs_cograph(&h)?,
        (Problem::Oct, GraphClass::Cograph) => cograph::min_oct_cograph(&h)?,
        (Problem::Fvs, GraphClass::Sp1P3Free(s)) => sp1p3::fvs_sp1p3(&h, s)?,
        (Problem::Oct, GraphClass::Sp1P3Free(s)) => sp1p3::oct_sp1p3(&h, s)?,
        _ => unreachable!("unsupported pairs are rejected earlier"),
    };
    let lifted: VertexSet = sol.vertices.iter().map(|v| map[v]).collect();
    Ok(oracle::checked(g, problem, w | lifted, w))
}

/// Connected vertex cover through the pipeline, on the one component that
/// needs cover vertices.
fn cvc(g: &Graph, w: VertexSet, s: usize) -> Result<TransversalSolution> {
    let Some(comp) = oracle::relevant_component(g, Target::Edgeless, w)? else {
        return Ok(oracle::checked(g, Problem::CvcExt, VertexSet::EMPTY, w));
    };
    let (h, map) = g.induced_subgraph(comp)?;
    let local: VertexSet = map.iter().enumerate().filter(|(_, &v)| w.contains(v)).map(|(i, _)| i).collect();
    let sol = oracle::cvc_extension_pipeline(&h, local, s, &ExactSubroutines)?;
    let lifted: VertexSet = sol.vertices.iter().map(|v| map[v]).collect();
    Ok(oracle::checked(g, Problem::CvcExt, lifted, w))
}

/// Solves `problem` on `g` with required set `w`.
///
/// `Error::NotInClass` is returned when the specialized engine is forced on
/// an input outside the requested class, and `Error::EngineMismatch` when
/// both engines run and disagree.
pub fn solve(
    g: &Graph,
    problem: Problem,
    w: VertexSet,
    class: ClassChoice,
    engine: EngineChoice,
) -> Result<SolveOutcome> {
    check_problem(problem)?;
    g.check_set(w)?;
    let cert = certify(g, problem, class);
    let usable = cert.certified.filter(|&c| supported(problem, c));
    let need_specialized = matches!(engine, EngineChoice::Specialized | EngineChoice::Both);
    if need_specialized && usable.is_none() {
        if let Some(c) = cert.certified {
            return Err(Error::Precondition(format!(
                "no specialized algorithm for {problem} on {c} graphs"
            )));
        }
        let last = cert.rejected.last().expect("a rejected class when none is certified");
        return Err(match last.class.pattern() {
            Some(pattern) => Error::NotInClass {
                pattern,
                certificate: last.witness.clone(),
            },
            None => Error::Precondition(format!("graph is not {}", last.class)),
        });
    }
    let (solution, algorithm) = match (engine, usable) {
        (EngineChoice::Oracle, _) | (EngineChoice::Auto, None) => (solve_oracle(g, problem, w)?, Algorithm::Oracle),
        (EngineChoice::Auto | EngineChoice::Specialized, Some(c)) => {
            (solve_specialized(g, problem, w, c)?, Algorithm::Specialized)
        }
        (EngineChoice::Both, Some(c)) => {
            let fast = solve_specialized(g, problem, w, c)?;
            let slow = solve_oracle(g, problem, w)?;
            let (a, b) = (fast.as_ref().map(|s| s.objective()), slow.as_ref().map(|s| s.objective()));
            if a != b {
                return Err(Error::EngineMismatch {
                    specialized: a,
                    oracle: b,
                });
            }
            (fast, Algorithm::Both)
        }
        (EngineChoice::Specialized | EngineChoice::Both, None) => unreachable!("handled above"),
    };
    if let Some(sol) = &solution {
        if let Err(v) = sol.validate(g, w) {
            panic!("{} solution {} failed validation: {v}", algorithm.name(), sol.vertices);
        }
    }
    Ok(SolveOutcome {
        solution,
        algorithm,
        class: cert,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn run(g: &Graph, p: Problem, w: &[usize], class: &str, engine: &str) -> Result<SolveOutcome> {
        solve(g, p, VertexSet::from_slice(w), class.parse()?, engine.parse()?)
    }

    #[test]
    fn oct_on_c4_is_zero() {
        let out = run(&cycle(4), Problem::Oct, &[], "p4free", "auto").unwrap();
        assert_eq!(out.solution.unwrap().objective(), 0);
        assert_eq!(out.algorithm, Algorithm::Specialized);
        assert_eq!(out.class.certified, Some(GraphClass::Cograph));
    }

    #[test]
    fn specialized_rejects_p4() {
        match run(&path(4), Problem::Fvs, &[], "p4free", "specialized") {
            Err(Error::NotInClass { certificate, .. }) => assert_eq!(certificate.len(), 4),
            other => panic!("{other:?}"),
        }
        let out = run(&path(4), Problem::Fvs, &[], "p4free", "auto").unwrap();
        assert_eq!(out.algorithm, Algorithm::Oracle);
        assert_eq!(out.class.rejected.len(), 1);
    }

    #[test]
    fn auto_detects_smallest_class() {
        let out = run(&path(4), Problem::Oct, &[], "auto", "both").unwrap();
        assert_eq!(out.class.certified, Some(GraphClass::Sp1P3Free(1)));
        let out = run(&path(5), Problem::CvcExt, &[], "auto", "both").unwrap();
        assert_eq!(out.class.certified, Some(GraphClass::Sp1P5Free(1)));
        assert_eq!(out.solution.unwrap().objective(), 3);
        let out = run(&cycle(7), Problem::Vc, &[], "auto", "auto").unwrap();
        assert_eq!(out.algorithm, Algorithm::Oracle);
        assert_eq!(out.solution.unwrap().objective(), 4);
    }

    #[test]
    fn extension_and_infeasible() {
        let g = cycle(4);
        let out = run(&g, Problem::CfvsExt, &[0], "sp1p3:1", "both").unwrap();
        assert_eq!(out.solution.unwrap().vertices, VertexSet::singleton(0));
        let two = disjoint_union(&complete(3), &complete(3));
        let out = run(&two, Problem::CoctExt, &[], "auto", "both").unwrap();
        assert!(out.solution.is_none());
        let out = run(&two, Problem::Fvs, &[0, 1], "auto", "both").unwrap();
        assert_eq!(out.solution.unwrap().objective(), 3);
        let out = run(&two, Problem::CvcExt, &[0], "auto", "both").unwrap();
        assert!(out.solution.is_none());
    }

    #[test]
    fn unsupported_pairs() {
        assert!(run(&cycle(5), Problem::Vc, &[], "sp1p3:1", "specialized").is_err());
        assert!(solve_oracle(&cycle(5), Problem::Mis, VertexSet::EMPTY).is_err());
        assert!("fast".parse::<EngineChoice>().is_err());
    }
}
