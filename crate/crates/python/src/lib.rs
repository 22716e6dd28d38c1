//! Python bindings: graphs, the exact solver, the planar 8-colouring and the
//! discharging checks.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use oddcolour::colouring::{is_odd_colouring as odd_check, PartialColouring};
use oddcolour::discharging;
use oddcolour::embedding::embed_planar;
use oddcolour::error::Error;
use oddcolour::io;
use oddcolour::pipeline;
use oddcolour::solver::{self, SolveOutcome, DEFAULT_BUDGET};

create_exception!(oddcolour_py, OddColourError, PyException);
create_exception!(oddcolour_py, BudgetExhausted, OddColourError);
create_exception!(oddcolour_py, Contradiction, OddColourError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExhausted(_) => BudgetExhausted::new_err(e.to_string()),
        Error::Contradiction(_) => Contradiction::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn json_to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "oddcolour_py", from_py_object)]
#[derive(Clone)]
pub struct PyGraph {
    pub inner: oddcolour::graph::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        oddcolour::graph::Graph::from_edges(n, &edges).map(|inner| PyGraph { inner }).map_err(to_py)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        io::parse_graph6(text).map(|inner| PyGraph { inner }).map_err(to_py)
    }

    fn to_graph6(&self) -> String {
        io::to_graph6(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if !self.inner.contains(v) {
            return Err(to_py(Error::NoSuchVertex(v)));
        }
        Ok(self.inner.degree(v))
    }

    fn neighbours(&self, v: usize) -> PyResult<Vec<usize>> {
        if !self.inner.contains(v) {
            return Err(to_py(Error::NoSuchVertex(v)));
        }
        Ok(self.inner.neighbours(v).iter().copied().collect())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_planar(&self) -> bool {
        embed_planar(&self.inner).is_some()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, edges={})", self.inner.order(), self.inner.edge_count())
    }
}

fn colours(g: &oddcolour::graph::Graph, c: &PartialColouring) -> Vec<usize> {
    g.vertices().map(|v| c.get(v).expect("total colouring")).collect()
}

#[pyfunction]
fn catalog(name: &str) -> PyResult<PyGraph> {
    io::catalog_entry(name).map(|e| PyGraph { inner: e.graph }).map_err(to_py)
}

#[pyfunction]
fn catalog_names() -> Vec<String> {
    io::catalog_names()
}

#[pyfunction]
fn random_triangulation(n: usize, seed: u64) -> PyResult<PyGraph> {
    if n < 3 {
        return Err(PyValueError::new_err("a triangulation needs at least 3 vertices"));
    }
    Ok(PyGraph { inner: io::gen_random_planar(n, seed).0 })
}

/// True iff `colours[v]` is an odd colouring of `g`.
#[pyfunction]
fn is_odd_colouring(g: &PyGraph, colours: Vec<usize>) -> PyResult<bool> {
    if colours.len() != g.inner.id_bound() {
        return Err(PyValueError::new_err(format!(
            "expected {} colours, got {}",
            g.inner.id_bound(),
            colours.len()
        )));
    }
    let palette = colours.iter().max().map_or(1, |m| m + 1);
    let c = PartialColouring::from_colours(palette, &colours).map_err(to_py)?;
    odd_check(&g.inner, &c).map_err(to_py)
}

/// An odd colouring with at most `k` colours, or `None` if there is none.
#[pyfunction]
#[pyo3(signature = (g, k, budget = DEFAULT_BUDGET))]
fn solve(py: Python<'_>, g: &PyGraph, k: usize, budget: u64) -> PyResult<Option<Vec<usize>>> {
    let outcome = py.detach(|| solver::solve_odd_k(&g.inner, k, budget)).map_err(to_py)?;
    match outcome {
        SolveOutcome::Solved(c) => Ok(Some(colours(&g.inner, &c))),
        SolveOutcome::NoSolution => Ok(None),
        SolveOutcome::BudgetExhausted => Err(to_py(Error::BudgetExhausted(budget))),
    }
}

#[pyfunction]
#[pyo3(signature = (g, budget = DEFAULT_BUDGET))]
fn chi_odd(py: Python<'_>, g: &PyGraph, budget: u64) -> PyResult<usize> {
    py.detach(|| solver::chi_odd_exact(&g.inner, budget)).map_err(to_py)
}

/// Odd colouring of a planar graph with at most eight colours.
#[pyfunction]
fn colour8(py: Python<'_>, g: &PyGraph) -> PyResult<Vec<usize>> {
    if embed_planar(&g.inner).is_none() {
        return Err(PyValueError::new_err("graph is not planar"));
    }
    let out = py.detach(|| pipeline::odd_colour_planar_8(&g.inner)).map_err(to_py)?;
    Ok(colours(&g.inner, &out.colouring))
}

/// Parts of an odd-forest partition of a connected planar graph of even
/// order.
#[pyfunction]
#[pyo3(signature = (g, budget = DEFAULT_BUDGET))]
fn odd_forest_partition(py: Python<'_>, g: &PyGraph, budget: u64) -> PyResult<Vec<Vec<usize>>> {
    let parts = py.detach(|| pipeline::four_forest_partition(&g.inner, budget)).map_err(to_py)?;
    Ok(parts.into_iter().map(|p| p.into_iter().collect()).collect())
}

fn plane(g: &PyGraph) -> PyResult<oddcolour::embedding::RotationSystem> {
    embed_planar(&g.inner).ok_or_else(|| PyValueError::new_err("graph is not planar"))
}

/// Charge ledger before and after discharging, as a dict. Charges are in
/// quarters.
#[pyfunction]
fn discharge<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    #[derive(Serialize)]
    struct Out {
        total_before: i64,
        total_after: i64,
        before: discharging::ChargeLedger,
        after: discharging::ChargeLedger,
        transfers: Vec<discharging::TransferRecord>,
        claim3_violations: Vec<discharging::VertexViolation>,
        claim4_violations: Vec<discharging::FaceViolation>,
    }
    let rot = plane(g)?;
    let before = discharging::initial_charges(&g.inner, &rot).map_err(to_py)?;
    let (after, transfers) = discharging::apply_rules(&g.inner, &rot, &before).map_err(to_py)?;
    let out = Out {
        total_before: discharging::check_total(&before),
        total_after: discharging::check_total(&after),
        claim3_violations: discharging::verify_claim3(&g.inner, &rot, &after),
        claim4_violations: discharging::verify_claim4(&g.inner, &rot, &after),
        before,
        after,
        transfers,
    };
    json_to_py(py, &out)
}

#[pyfunction]
fn audit<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let rot = plane(g)?;
    let report = discharging::counterexample_audit(&g.inner, &rot).map_err(to_py)?;
    json_to_py(py, &report)
}

/// Adds every class, exception and function to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add("OddColourError", m.py().get_type::<OddColourError>())?;
    m.add("BudgetExhausted", m.py().get_type::<BudgetExhausted>())?;
    m.add("Contradiction", m.py().get_type::<Contradiction>())?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(random_triangulation, m)?)?;
    m.add_function(wrap_pyfunction!(is_odd_colouring, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(chi_odd, m)?)?;
    m.add_function(wrap_pyfunction!(colour8, m)?)?;
    m.add_function(wrap_pyfunction!(odd_forest_partition, m)?)?;
    m.add_function(wrap_pyfunction!(discharge, m)?)?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    Ok(())
}

#[pymodule]
fn oddcolour_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}
