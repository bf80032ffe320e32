//! Python bindings. Exact values come back as `int` and
//! `fractions.Fraction`; reports come back as plain dicts and lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use topoidx::constructions::{build, FamilySpec};
use topoidx::enumeration::{self, EnumSpec, GraphClass};
use topoidx::graph::graph6;
use topoidx::indices::{self, IndexKind, IndexValue};
use topoidx::verification::{self, Direction};
use topoidx::{Error, Rational};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse<T: std::str::FromStr<Err = Error>>(s: &str) -> PyResult<T> {
    s.parse().map_err(err)
}

fn workers(w: Option<usize>) -> PyResult<usize> {
    match w {
        Some(0) => Err(PyValueError::new_err("workers must be positive")),
        Some(w) => Ok(w),
        None => enumeration::workers_from_env().map_err(err),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

fn big_int<'py>(py: Python<'py>, v: &impl ToString) -> PyResult<Bound<'py, PyAny>> {
    py.import("builtins")?.getattr("int")?.call1((v.to_string(),))
}

fn value<'py>(py: Python<'py>, v: &IndexValue) -> PyResult<Bound<'py, PyAny>> {
    match v {
        IndexValue::Integer(i) => big_int(py, i),
        IndexValue::Fraction(r) => fraction(py, r),
    }
}

/// JSON produced by the core library, loaded with Python's `json`.
fn from_json<'py>(py: Python<'py>, v: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph(topoidx::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        topoidx::Graph::from_edge_list(n, &edges).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(code: &str) -> PyResult<Self> {
        graph6::decode(code).map(PyGraph).map_err(err)
    }

    fn graph6(&self) -> PyResult<String> {
        graph6::encode(&self.0).map_err(err)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges()
    }

    fn degrees(&self) -> Vec<usize> {
        self.0.degrees()
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        from_json(py, &topoidx::graph::classify(&self.0))
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={:?})", self.0.order(), self.0.edges())
    }
}

#[pyfunction]
fn wiener(g: &PyGraph) -> PyResult<u64> {
    indices::wiener(&g.0).map_err(err)
}

#[pyfunction]
fn harary<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &indices::harary(&g.0).map_err(err)?)
}

/// All six indices as a dict keyed by index name.
#[pyfunction]
fn index_bundle<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let b = indices::index_bundle(&g.0).map_err(err)?;
    let d = PyDict::new(py);
    for kind in IndexKind::ALL {
        d.set_item(kind.name(), value(py, &b.get(kind))?)?;
    }
    Ok(d)
}

#[pyfunction]
fn cycle_closed_forms<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let b = indices::cycle_closed_forms(n).map_err(err)?;
    let d = PyDict::new(py);
    for kind in IndexKind::ALL {
        d.set_item(kind.name(), value(py, &b.get(kind))?)?;
    }
    Ok(d)
}

/// Distance profile as a dict `{distance: pair count}`.
#[pyfunction]
fn distance_profile<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let p = indices::distance_profile(&g.0).map_err(err)?;
    let d = PyDict::new(py);
    for (dist, count) in p.iter() {
        d.set_item(dist, count)?;
    }
    Ok(d)
}

#[pyfunction]
#[pyo3(signature = (kind, n=None, lengths=Vec::new()))]
fn family(kind: &str, n: Option<usize>, lengths: Vec<usize>) -> PyResult<PyGraph> {
    let spec = FamilySpec::parse(kind, n, &lengths).map_err(err)?;
    build(&spec).map(PyGraph).map_err(err)
}

/// graph6 of the canonical form.
#[pyfunction]
fn canonical_form(g: &PyGraph) -> PyResult<String> {
    enumeration::canonical_form(&g.0).map(|c| c.graph6()).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (graph_class, n, dedupe=false, workers=None))]
fn enumerate(
    py: Python<'_>,
    graph_class: &str,
    n: usize,
    dedupe: bool,
    workers: Option<usize>,
) -> PyResult<Vec<PyGraph>> {
    let class: GraphClass = parse(graph_class)?;
    let mut spec = EnumSpec::new(n, class);
    if dedupe {
        spec = spec.deduped();
    }
    let w = self::workers(workers)?;
    let graphs = py.detach(|| enumeration::enumerate(spec, w)).map_err(err)?;
    Ok(graphs.into_iter().map(PyGraph).collect())
}

#[pyfunction]
#[pyo3(signature = (graph_class, n, index, direction, workers=None))]
fn extremal_scan<'py>(
    py: Python<'py>,
    graph_class: &str,
    n: usize,
    index: &str,
    direction: &str,
    workers: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let class: GraphClass = parse(graph_class)?;
    let kind: IndexKind = parse(index)?;
    let dir: Direction = parse(direction)?;
    let w = self::workers(workers)?;
    let report = py.detach(|| verification::extremal_scan(class, n, kind, dir, w)).map_err(err)?;
    from_json(py, &report)
}

#[pyfunction]
fn vertex_domination_check<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    from_json(py, &verification::vertex_domination_check(&g.0).map_err(err)?)
}

#[pyfunction]
fn claim1_check<'py>(py: Python<'py>, a: usize, b: usize) -> PyResult<Bound<'py, PyAny>> {
    from_json(py, &verification::claim1_check(a, b).map_err(err)?)
}

/// Rows `(n, H(G1), H(G2), sign)` with exact fractions.
#[pyfunction]
fn crossing_table<'py>(py: Python<'py>, n_from: usize, n_to: usize) -> PyResult<Bound<'py, PyList>> {
    let rows = verification::crossing_table(n_from, n_to).map_err(err)?;
    let out = PyList::empty(py);
    for r in rows {
        out.append((r.n, fraction(py, &r.h_g1)?, fraction(py, &r.h_g2)?, r.sign))?;
    }
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (n_max_eulerian, n_max_2ec, workers=None))]
fn theorem_suite<'py>(
    py: Python<'py>,
    n_max_eulerian: usize,
    n_max_2ec: usize,
    workers: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let w = self::workers(workers)?;
    let report = py.detach(|| verification::theorem_suite(n_max_eulerian, n_max_2ec, w)).map_err(err)?;
    from_json(py, &report)
}

#[pymodule]
#[pyo3(name = "topoidx")]
fn topoidx_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(wiener, m)?)?;
    m.add_function(wrap_pyfunction!(harary, m)?)?;
    m.add_function(wrap_pyfunction!(index_bundle, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_closed_forms, m)?)?;
    m.add_function(wrap_pyfunction!(distance_profile, m)?)?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_scan, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_domination_check, m)?)?;
    m.add_function(wrap_pyfunction!(claim1_check, m)?)?;
    m.add_function(wrap_pyfunction!(crossing_table, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_suite, m)?)?;
    Ok(())
}
