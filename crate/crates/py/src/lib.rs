//! Python module `antimagic`.

use antimagic_core::euler;
use antimagic_core::graph::{Graph, Vertex};
use antimagic_core::labeling::{self, Labeling, Orientation, Solution, SolutionRecord};
use antimagic_core::oracle::{self, SearchBudget, SearchOutcome};
use antimagic_core::{constructors, parse_graph};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

type Arcs = Vec<(Vertex, Vertex)>;

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Undirected simple graph on vertices 0..n.
#[pyclass(name = "Graph", module = "antimagic", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> PyResult<Self> {
        Graph::new(n, edges).map(|inner| PyGraph { inner }).map_err(value_error)
    }

    /// Parses the "n m" header plus edge lines format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_graph(text).map(|inner| PyGraph { inner }).map_err(value_error)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.inner.edges().to_vec()
    }

    fn degree(&self, v: Vertex) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(value_error(format!("vertex {v} out of range")));
        }
        Ok(self.inner.degree(v))
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// A verified antimagic orientation.
#[pyclass(name = "Solution", module = "antimagic", frozen)]
pub struct PySolution {
    inner: Solution,
}

#[pymethods]
impl PySolution {
    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph { inner: self.inner.graph().clone() }
    }

    /// Arcs as (tail, head), indexed like the graph's edges.
    #[getter]
    fn arcs(&self) -> Vec<(Vertex, Vertex)> {
        self.inner.orientation().arcs().to_vec()
    }

    #[getter]
    fn labels(&self) -> Vec<u32> {
        self.inner.labeling().labels().to_vec()
    }

    #[getter]
    fn sums(&self) -> Vec<i64> {
        self.inner.sums().to_vec()
    }

    #[getter]
    fn provenance(&self) -> &'static str {
        self.inner.provenance().tag()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        let record: SolutionRecord = text.parse().map_err(value_error)?;
        record.into_solution().map(|inner| PySolution { inner }).map_err(value_error)
    }

    fn __repr__(&self) -> String {
        format!("Solution(m={}, provenance={})", self.inner.graph().m(), self.inner.provenance())
    }
}

/// Constructs a verified antimagic orientation. Raises ValueError when the
/// graph is refused or malformed, RuntimeError when a construction fails.
#[pyfunction]
#[pyo3(signature = (graph, oracle_budget = constructors::DEFAULT_ORACLE_BUDGET))]
fn solve(graph: &PyGraph, oracle_budget: usize) -> PyResult<PySolution> {
    match constructors::solve(&graph.inner, oracle_budget) {
        Ok(inner) => Ok(PySolution { inner }),
        Err(e @ constructors::SolveError::ConstructionFailed { .. }) => Err(PyRuntimeError::new_err(e.to_string())),
        Err(e) => Err(value_error(e)),
    }
}

/// Returns (ok, defect message or None, sums).
#[pyfunction]
fn verify(graph: &PyGraph, arcs: Vec<(Vertex, Vertex)>, labels: Vec<u32>) -> PyResult<(bool, Option<String>, Vec<i64>)> {
    let report = labeling::verify_antimagic(&graph.inner, &Orientation::new(arcs), &Labeling::new(labels)).map_err(value_error)?;
    Ok((report.ok, report.defect.map(|d| d.to_string()), report.sums.unwrap_or_default()))
}

/// Orients and labels a connected graph from an ascending label list;
/// returns (arcs, labels).
#[pyfunction]
fn euler_orient_label(graph: &PyGraph, labels: Vec<u32>) -> PyResult<(Arcs, Vec<u32>)> {
    let (d, t) = euler::euler_orient_label(&graph.inner, &labels).map_err(value_error)?;
    Ok((d.arcs().to_vec(), t.labels().to_vec()))
}

/// Exhaustive search. Returns a Solution, or None when none exists; raises
/// RuntimeError when a cap is hit.
#[pyfunction]
#[pyo3(signature = (graph, max_edges = constructors::DEFAULT_ORACLE_BUDGET, max_nodes = None, max_millis = None))]
fn brute_force_solve(
    py: Python<'_>,
    graph: &PyGraph,
    max_edges: usize,
    max_nodes: Option<u64>,
    max_millis: Option<u64>,
) -> PyResult<Option<PySolution>> {
    let budget = SearchBudget { max_edges, max_nodes, max_millis };
    let g = &graph.inner;
    let outcome = py.detach(|| oracle::brute_force_solve(g, &budget)).map_err(value_error)?;
    match outcome {
        SearchOutcome::Found(inner) => Ok(Some(PySolution { inner })),
        SearchOutcome::Exhausted => Ok(None),
        SearchOutcome::BudgetExceeded => Err(PyRuntimeError::new_err("search budget exceeded")),
    }
}

/// Seeded random connected graph with maximum degree `delta`; returns
/// (graph, hub).
#[pyfunction]
fn random_connected_graph(n: usize, delta: usize, seed: u64) -> PyResult<(PyGraph, Vertex)> {
    let generated = oracle::random_connected_graph(n, delta, seed).map_err(value_error)?;
    Ok((PyGraph { inner: generated.graph }, generated.hub))
}

/// One graph per isomorphism class of connected graphs on n ≤ 7 vertices.
#[pyfunction]
fn enumerate_connected_graphs(n: usize) -> PyResult<Vec<PyGraph>> {
    oracle::enumerate_connected_graphs(n)
        .map(|gs| gs.into_iter().map(|inner| PyGraph { inner }).collect())
        .ok_or_else(|| value_error(format!("n must lie in 1..={}", oracle::MAX_ENUMERATION_N)))
}

#[pymodule]
fn antimagic(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PySolution>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(euler_orient_label, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_solve, m)?)?;
    m.add_function(wrap_pyfunction!(random_connected_graph, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_connected_graphs, m)?)?;
    m.add("DEFAULT_ORACLE_BUDGET", constructors::DEFAULT_ORACLE_BUDGET)?;
    Ok(())
}
