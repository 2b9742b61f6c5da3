//! Python bindings. Results that carry structured data (run records,
//! oracle reports, suite reports) are returned as plain dicts.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use interval_fpt::completion::{enumerate_cycle_triangulations, interval_completion_with, optimize_completion};
use interval_fpt::deletion::{interval_deletion_with, optimize_deletion};
use interval_fpt::generators;
use interval_fpt::io::{parse_instance, to_instance_string};
use interval_fpt::obstructions::{find_small_obstruction, Obstruction};
use interval_fpt::oracle::{self, OracleConfig};
use interval_fpt::props::{run_suite, Suite};
use interval_fpt::record::RunRecord;
use interval_fpt::recognition;
use interval_fpt::search::SolverConfig;
use interval_fpt::{Edge, Error, VertexId};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::Parse { .. } | Error::InvalidParameter(_) | Error::UnknownVertex(_) | Error::ContractViolation(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "Graph", module = "_interval_fpt", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: interval_fpt::Graph,
}

#[pymethods]
impl PyGraph {
    /// Graph on vertices `0..n` with the given edge pairs.
    #[new]
    fn new(n: usize, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        Ok(PyGraph { inner: interval_fpt::Graph::from_edges(n, &edges).map_err(to_py_err)? })
    }

    #[staticmethod]
    fn from_instance(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: parse_instance(text).map_err(to_py_err)? })
    }

    fn to_instance(&self) -> String {
        to_instance_string(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn vertices(&self) -> Vec<u32> {
        self.inner.vertices().iter().map(|v| v.0).collect()
    }

    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges().map(|e| (e.u().0, e.v().0)).collect()
    }

    fn is_chordal(&self) -> bool {
        recognition::is_chordal(&self.inner).is_chordal()
    }

    fn is_interval(&self) -> bool {
        recognition::is_interval(&self.inner)
    }

    /// An asteroidal triple `(a, b, c)`, or `None`.
    fn find_at(&self) -> Option<(u32, u32, u32)> {
        recognition::find_at(&self.inner).map(|w| (w.a.0, w.b.0, w.c.0))
    }

    /// `("hole", [...])`, `("small_at", [...])` or `None`.
    fn find_small_obstruction(&self) -> Option<(&'static str, Vec<u32>)> {
        find_small_obstruction(&self.inner).map(|o| match o {
            Obstruction::Hole(c) => ("hole", c.iter().map(|v| v.0).collect()),
            Obstruction::SmallAt(s) => ("small_at", s.iter().map(|v| v.0).collect()),
        })
    }

    fn remove_vertices(&self, vertices: Vec<u32>) -> PyResult<Self> {
        let drop = vertices.into_iter().map(VertexId).collect();
        Ok(PyGraph { inner: self.inner.remove_vertices(&drop).map_err(to_py_err)? })
    }

    fn add_edges(&self, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        let extra = edges.into_iter().map(|(u, v)| Edge::new(u, v)).collect();
        Ok(PyGraph { inner: self.inner.add_edges(&extra).map_err(to_py_err)? })
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

fn config(parallel: bool) -> SolverConfig {
    SolverConfig { parallel, ..Default::default() }
}

/// Run record of a deletion run as a dict.
#[pyfunction]
#[pyo3(signature = (g, k, parallel = false))]
fn interval_deletion<'py>(py: Python<'py>, g: &PyGraph, k: usize, parallel: bool) -> PyResult<Bound<'py, PyAny>> {
    let r = py.detach(|| interval_deletion_with(&g.inner, k, &config(parallel))).map_err(to_py_err)?;
    json_to_py(py, &RunRecord::deletion(&g.inner, k, &r).map_err(to_py_err)?.to_json())
}

#[pyfunction]
#[pyo3(signature = (g, k, parallel = false))]
fn interval_completion<'py>(py: Python<'py>, g: &PyGraph, k: usize, parallel: bool) -> PyResult<Bound<'py, PyAny>> {
    let r = py.detach(|| interval_completion_with(&g.inner, k, &config(parallel))).map_err(to_py_err)?;
    json_to_py(py, &RunRecord::completion(&g.inner, k, &r).map_err(to_py_err)?.to_json())
}

/// Smallest deletion budget up to `k_max`, or `None`.
#[pyfunction]
#[pyo3(signature = (g, k_max, parallel = false))]
fn min_deletion(py: Python<'_>, g: &PyGraph, k_max: usize, parallel: bool) -> PyResult<Option<(usize, Vec<u32>)>> {
    let o = py.detach(|| optimize_deletion(&g.inner, k_max, &config(parallel))).map_err(to_py_err)?;
    Ok(o.optimum.zip(o.solution).map(|(k, f)| (k, f.iter().map(|v| v.0).collect())))
}

#[pyfunction]
#[pyo3(signature = (g, k_max, parallel = false))]
fn min_completion(py: Python<'_>, g: &PyGraph, k_max: usize, parallel: bool) -> PyResult<Option<(usize, Vec<(u32, u32)>)>> {
    let o = py.detach(|| optimize_completion(&g.inner, k_max, &config(parallel))).map_err(to_py_err)?;
    Ok(o.optimum.zip(o.solution).map(|(k, f)| (k, f.iter().map(|e| (e.u().0, e.v().0)).collect())))
}

#[pyfunction]
fn oracle_is_interval(g: &PyGraph) -> PyResult<bool> {
    oracle::oracle_is_interval(&g.inner).map_err(to_py_err)
}

#[pyfunction]
fn brute_force_min_deletion<'py>(py: Python<'py>, g: &PyGraph, k_max: usize) -> PyResult<Bound<'py, PyAny>> {
    let r = oracle::brute_force_min_deletion(&g.inner, k_max, &OracleConfig::default()).map_err(to_py_err)?;
    json_to_py(py, &serde_json::to_string(&r).expect("report serialises"))
}

#[pyfunction]
fn brute_force_min_completion<'py>(py: Python<'py>, g: &PyGraph, k_max: usize) -> PyResult<Bound<'py, PyAny>> {
    let r = oracle::brute_force_min_completion(&g.inner, k_max, &OracleConfig::default()).map_err(to_py_err)?;
    json_to_py(py, &serde_json::to_string(&r).expect("report serialises"))
}

/// Chord sets of every triangulation of the cycle given in cyclic order.
#[pyfunction]
fn cycle_triangulations(cycle: Vec<u32>) -> PyResult<Vec<Vec<(u32, u32)>>> {
    let ids: Vec<VertexId> = cycle.into_iter().map(VertexId).collect();
    let t = enumerate_cycle_triangulations(&ids).map_err(to_py_err)?;
    Ok(t.into_iter().map(|s| s.into_iter().map(|e| (e.u().0, e.v().0)).collect()).collect())
}

#[pyfunction]
fn gadget_type1(p: usize) -> PyResult<PyGraph> {
    if p < 7 {
        return Err(PyValueError::new_err("type-1 gadgets need p >= 7"));
    }
    Ok(PyGraph { inner: generators::gadget_type1(p).0 })
}

#[pyfunction]
fn gadget_type2(p: usize) -> PyResult<PyGraph> {
    if p < 6 {
        return Err(PyValueError::new_err("type-2 gadgets need p >= 6"));
    }
    Ok(PyGraph { inner: generators::gadget_type2(p).0 })
}

#[pyfunction]
fn long_cycle(len: usize) -> PyResult<PyGraph> {
    if len < 3 {
        return Err(PyValueError::new_err("a cycle needs at least 3 vertices"));
    }
    Ok(PyGraph { inner: generators::long_cycle(len) })
}

#[pyfunction]
fn gnp(n: usize, prob: f64, seed: u64) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: generators::gnp(n, prob, seed).map_err(to_py_err)? })
}

/// Summary dict of a property suite run.
#[pyfunction]
#[pyo3(signature = (suite, count = 100, seed = 0))]
fn verify_props<'py>(py: Python<'py>, suite: &str, count: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let suite: Suite = suite.parse().map_err(to_py_err)?;
    let rep = py.detach(|| run_suite(suite, count, seed));
    json_to_py(py, &serde_json::to_string(&rep).expect("report serialises"))
}

#[pymodule]
fn _interval_fpt(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(interval_deletion, m)?)?;
    m.add_function(wrap_pyfunction!(interval_completion, m)?)?;
    m.add_function(wrap_pyfunction!(min_deletion, m)?)?;
    m.add_function(wrap_pyfunction!(min_completion, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_is_interval, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_min_deletion, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_min_completion, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_triangulations, m)?)?;
    m.add_function(wrap_pyfunction!(gadget_type1, m)?)?;
    m.add_function(wrap_pyfunction!(gadget_type2, m)?)?;
    m.add_function(wrap_pyfunction!(long_cycle, m)?)?;
    m.add_function(wrap_pyfunction!(gnp, m)?)?;
    m.add_function(wrap_pyfunction!(verify_props, m)?)?;
    Ok(())
}
