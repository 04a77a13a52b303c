//! Python bindings for `transversal-core`.
//!
//! Vertex sets cross the boundary as sorted lists of ints.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use transversal_core::dispatch::{self, ClassChoice, EngineChoice};
use transversal_core::genio::{self, GeneratorSpec, GraphClass};
use transversal_core::pattern;
use transversal_core::reduction::{self, OctInstance, VcInstance};
use transversal_core::suites::{self, SuiteParams};
use transversal_core::set::MAX_VERTICES;
use transversal_core::{oracle, Error, LinearForestPattern, Problem, VertexSet};

create_exception!(transversal, TransversalError, PyValueError);
create_exception!(transversal, OutOfClassError, TransversalError);
create_exception!(transversal, InfeasibleError, TransversalError);
create_exception!(transversal, EngineMismatchError, PyRuntimeError);

fn err(e: Error) -> PyErr {
    match e {
        Error::NotInClass { .. } => OutOfClassError::new_err(e.to_string()),
        Error::Infeasible(_) => InfeasibleError::new_err(e.to_string()),
        Error::EngineMismatch { .. } => EngineMismatchError::new_err(e.to_string()),
        other => TransversalError::new_err(other.to_string()),
    }
}

fn to_set(vs: &[usize]) -> PyResult<VertexSet> {
    match vs.iter().find(|&&v| v >= MAX_VERTICES) {
        Some(v) => Err(TransversalError::new_err(format!("vertex {v} out of range"))),
        None => Ok(VertexSet::from_slice(vs)),
    }
}

fn problem(name: &str) -> PyResult<Problem> {
    Problem::from_name(name).ok_or_else(|| TransversalError::new_err(format!("unknown problem {name:?}")))
}

#[pyclass(name = "Graph", module = "transversal", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: transversal_core::Graph,
}

impl PyGraph {
    fn set(&self, vertices: Option<Vec<usize>>) -> PyResult<VertexSet> {
        let s = to_set(&vertices.unwrap_or_default())?;
        self.inner.check_set(s).map_err(err)?;
        Ok(s)
    }
}

fn wrap(g: transversal_core::Graph) -> PyGraph {
    PyGraph { inner: g }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        transversal_core::Graph::from_edges(n, edges).map(wrap).map_err(err)
    }

    #[staticmethod]
    fn from_edgelist(text: &str) -> PyResult<Self> {
        genio::parse_edgelist(text).map(wrap).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        genio::parse_graph6(text).map(wrap).map_err(err)
    }

    fn to_edgelist(&self) -> String {
        genio::serialize_edgelist(&self.inner)
    }

    fn to_graph6(&self) -> String {
        genio::serialize_graph6(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.check_vertex(v).map_err(err)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn complement(&self) -> Self {
        wrap(self.inner.complement())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Returns the subgraph and, for each of its vertices, the original label.
    fn induced_subgraph(&self, vertices: Vec<usize>) -> PyResult<(Self, Vec<usize>)> {
        let s = self.set(Some(vertices))?;
        let (h, map) = self.inner.induced_subgraph(s).map_err(err)?;
        Ok((wrap(h), map))
    }

    /// Returns the contracted graph and the new label of every old vertex.
    fn contract_edge(&self, u: usize, v: usize) -> PyResult<(Self, Vec<usize>)> {
        let (h, map) = self.inner.contract_edge(u, v).map_err(err)?;
        Ok((wrap(h), map))
    }

    /// Raises `TransversalError` describing the violation if `solution` is not
    /// a valid answer for `problem` containing `required`.
    #[pyo3(signature = (problem_name, solution, required = None))]
    fn validate(&self, problem_name: &str, solution: Vec<usize>, required: Option<Vec<usize>>) -> PyResult<()> {
        let p = problem(problem_name)?;
        let s = self.set(Some(solution))?;
        let w = self.set(required)?;
        self.inner
            .validate_solution(p, s, w)
            .map_err(|v| TransversalError::new_err(format!("{v:?}")))
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Solves `problem` (vc, cvc, fvs, cfvs, oct, coct) and returns a dict with
/// `solution` (None when infeasible), `objective`, `algorithm` and `class`.
#[pyfunction]
#[pyo3(signature = (graph, problem_name, required = None, class_name = "auto", engine = "auto"))]
fn solve<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    problem_name: &str,
    required: Option<Vec<usize>>,
    class_name: &str,
    engine: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let p = problem(problem_name)?;
    let w = graph.set(required)?;
    let class: ClassChoice = class_name.parse().map_err(err)?;
    let engine: EngineChoice = engine.parse().map_err(err)?;
    let out = py
        .detach(|| dispatch::solve(&graph.inner, p, w, class, engine))
        .map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("solution", out.solution.as_ref().map(|s| s.vertices.to_vec()))?;
    d.set_item("objective", out.solution.as_ref().map(|s| s.objective()))?;
    d.set_item("algorithm", out.algorithm.name())?;
    d.set_item("class", out.class.certified.map(|c| c.to_string()))?;
    Ok(d)
}

/// Exact answer by exhaustive search; `required` is honoured for the
/// connected problems and added up front for the others.
#[pyfunction]
#[pyo3(signature = (graph, problem_name, required = None))]
fn oracle_solve(py: Python<'_>, graph: &PyGraph, problem_name: &str, required: Option<Vec<usize>>) -> PyResult<Option<Vec<usize>>> {
    let p = problem(problem_name)?;
    let w = graph.set(required)?;
    let sol = py.detach(|| dispatch::solve_oracle(&graph.inner, p, w)).map_err(err)?;
    Ok(sol.map(|s| s.vertices.to_vec()))
}

#[pyfunction]
fn min_vertex_cover(graph: &PyGraph) -> Vec<usize> {
    oracle::min_vertex_cover(&graph.inner).vertices.to_vec()
}

#[pyfunction]
fn max_independent_set(graph: &PyGraph) -> Vec<usize> {
    oracle::max_independent_set(&graph.inner).vertices.to_vec()
}

#[pyfunction]
fn min_fvs(graph: &PyGraph) -> Vec<usize> {
    oracle::min_fvs(&graph.inner).vertices.to_vec()
}

#[pyfunction]
fn min_oct(graph: &PyGraph) -> Vec<usize> {
    oracle::min_oct(&graph.inner).vertices.to_vec()
}

/// An induced copy of `pattern` (e.g. "P2+P5") as a vertex list, or None.
#[pyfunction]
fn find_induced(graph: &PyGraph, pattern_text: &str) -> PyResult<Option<Vec<usize>>> {
    let p: LinearForestPattern = pattern_text.parse().map_err(err)?;
    Ok(pattern::find_induced(&graph.inner, &p).map(|c| c.vertices()))
}

#[pyfunction]
fn is_free(graph: &PyGraph, pattern_text: &str) -> PyResult<bool> {
    let p: LinearForestPattern = pattern_text.parse().map_err(err)?;
    Ok(pattern::is_hfree(&graph.inner, &p))
}

#[pyfunction]
fn is_cograph(graph: &PyGraph) -> bool {
    pattern::is_cograph(&graph.inner)
}

/// Random graph in a class ("any", "cograph", "bipartite", "sp1p3:<s>",
/// "sp1p5:<s>"); deterministic in `seed`.
#[pyfunction]
#[pyo3(signature = (class_name, n, seed = 0, density = 0.5, connected = false))]
fn generate(class_name: &str, n: usize, seed: u64, density: f64, connected: bool) -> PyResult<PyGraph> {
    let class: GraphClass = class_name.parse().map_err(err)?;
    let spec = GeneratorSpec::new(class, n, seed).density(density).connected(connected);
    genio::random_in_class(&spec).map(wrap).map_err(err)
}

/// Vertex cover to connected odd cycle transversal reduction.
#[pyclass(name = "Reduction", module = "transversal", frozen)]
struct PyReduction {
    inner: OctInstance,
}

#[pymethods]
impl PyReduction {
    #[new]
    #[pyo3(signature = (graph, k = None))]
    fn new(graph: &PyGraph, k: Option<usize>) -> PyResult<Self> {
        let inst = VcInstance::new(graph.inner.clone(), k.unwrap_or(graph.inner.n())).map_err(err)?;
        Ok(PyReduction {
            inner: reduction::build_reduction(&inst),
        })
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        wrap(self.inner.gstar.clone())
    }

    #[getter]
    fn budget(&self) -> usize {
        self.inner.budget
    }

    fn roles(&self) -> String {
        self.inner.roles_text()
    }

    fn certify_class(&self) -> bool {
        reduction::certify_class(&self.inner)
    }

    fn cover_to_transversal(&self, cover: Vec<usize>) -> PyResult<Vec<usize>> {
        let q = to_set(&cover)?;
        Ok(reduction::vc_to_coct(&self.inner, q).map_err(err)?.to_vec())
    }

    fn transversal_to_cover(&self, transversal: Vec<usize>) -> PyResult<Vec<usize>> {
        let s = to_set(&transversal)?;
        Ok(reduction::coct_to_vc(&self.inner, s).map_err(err)?.to_vec())
    }
}

/// Runs a named verification suite and returns `(checked, failed)`.
#[pyfunction]
#[pyo3(signature = (name, n = None, s = None, count = None, seed = 1))]
fn run_suite(py: Python<'_>, name: &str, n: Option<usize>, s: Option<usize>, count: Option<usize>, seed: u64) -> PyResult<(u64, u64)> {
    let params = SuiteParams { n, s, count, seed };
    let rep = py.detach(|| suites::run_suite(name, &params)).map_err(err)?;
    Ok((rep.checked, rep.failed))
}

#[pymodule]
fn transversal(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyGraph>()?;
    m.add_class::<PyReduction>()?;
    m.add("TransversalError", py.get_type::<TransversalError>())?;
    m.add("OutOfClassError", py.get_type::<OutOfClassError>())?;
    m.add("InfeasibleError", py.get_type::<InfeasibleError>())?;
    m.add("EngineMismatchError", py.get_type::<EngineMismatchError>())?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_solve, m)?)?;
    m.add_function(wrap_pyfunction!(min_vertex_cover, m)?)?;
    m.add_function(wrap_pyfunction!(max_independent_set, m)?)?;
    m.add_function(wrap_pyfunction!(min_fvs, m)?)?;
    m.add_function(wrap_pyfunction!(min_oct, m)?)?;
    m.add_function(wrap_pyfunction!(find_induced, m)?)?;
    m.add_function(wrap_pyfunction!(is_free, m)?)?;
    m.add_function(wrap_pyfunction!(is_cograph, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add("SUITES", suites::SUITE_NAMES.to_vec())?;
    Ok(())
}
