//! Python bindings: graphs, representations and the main pipelines.
//!
//! Structured data crosses the boundary as plain Python types (lists,
//! tuples, dicts); whole representations and certificates move as the same
//! JSON documents the CLI uses.

use std::collections::BTreeSet;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::IntoPyObjectExt;

use hgraph_core::builder;
use hgraph_core::error::Error;
use hgraph_core::fixtures;
use hgraph_core::fo;
use hgraph_core::framework;
use hgraph_core::json::{
    parse_json, GraphDto, MixedCertDto, RepresentationDto, SequenceDto, ThinCertDto,
};
use hgraph_core::order as ord;
use hgraph_core::properize as prop;
use hgraph_core::tree_thin as tthin;
use hgraph_core::twinwidth;
use hgraph_core::width;

fn err(e: Error) -> PyErr {
    match e {
        Error::ResourceLimit(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// A simple graph with string vertex ids.
#[pyclass(name = "Graph", skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: hgraph_core::SimpleGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(vertices: Vec<String>, edges: Vec<(String, String)>) -> PyResult<Self> {
        let mut g = hgraph_core::SimpleGraph::new(vertices).map_err(err)?;
        for (u, v) in &edges {
            g.add_edge(u, v).map_err(err)?;
        }
        Ok(PyGraph { inner: g })
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.vertices().to_vec()
    }

    #[getter]
    fn edges(&self) -> Vec<(String, String)> {
        self.inner.edge_set().into_iter().collect()
    }

    fn has_edge(&self, u: &str, v: &str) -> bool {
        self.inner.has_edge(u, v)
    }

    fn complement(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.complement(),
        }
    }

    fn is_connected_subset(&self, subset: Vec<String>) -> PyResult<bool> {
        let s: BTreeSet<String> = subset.into_iter().collect();
        self.inner.is_connected_subset(&s).map_err(err)
    }

    #[pyo3(signature = (limit = 20))]
    fn max_independent_set(&self, limit: usize) -> PyResult<(usize, Vec<String>)> {
        let (size, witness) = self
            .inner
            .max_independent_set_bruteforce(limit)
            .map_err(err)?;
        Ok((size, witness.into_iter().collect()))
    }

    fn true_twins(&self) -> Vec<(String, String)> {
        self.inner.true_twins()
    }

    fn __len__(&self) -> usize {
        self.inner.vertex_count()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph({} vertices, {} edges)",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// A family of connected vertex subsets of a subdivided multigraph.
#[pyclass(name = "Representation", skip_from_py_object)]
#[derive(Clone)]
struct PyRepresentation {
    inner: framework::HRepresentation,
}

#[pymethods]
impl PyRepresentation {
    /// Load from the JSON document format shared with the CLI.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let dto: RepresentationDto = parse_json(text).map_err(err)?;
        Ok(PyRepresentation {
            inner: dto.to_representation().map_err(err)?,
        })
    }

    fn to_json(&self) -> PyResult<String> {
        let dto = RepresentationDto::from_representation(&self.inner);
        serde_json::to_string_pretty(&dto).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn is_proper(&self) -> bool {
        self.inner.is_proper()
    }

    fn proper_violation(&self) -> Option<(String, String)> {
        self.inner.proper_violation()
    }

    fn is_non_crossing(&self) -> bool {
        self.inner.is_non_crossing()
    }

    fn intersection_graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.intersection_graph().clone(),
        }
    }

    fn normalize_minimal(&self) -> PyRepresentation {
        PyRepresentation {
            inner: self.inner.normalize_minimal(),
        }
    }

    #[getter]
    fn vertex_order(&self) -> Vec<String> {
        self.inner.vertex_order().to_vec()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "Representation({} sets over {} framework vertices)",
            self.inner.len(),
            self.inner.framework().vertex_count()
        )
    }
}

/// A named example representation from the built-in catalog.
#[pyfunction]
fn fixture(name: &str) -> PyResult<PyRepresentation> {
    fixtures::by_name(name)
        .map(|inner| PyRepresentation { inner })
        .ok_or_else(|| PyValueError::new_err(format!("unknown fixture {name:?}")))
}

#[pyfunction]
fn fixture_names() -> Vec<&'static str> {
    fixtures::FIXTURE_NAMES.to_vec()
}

/// Intersection representation of all k'-vertex paths of a 2k'-cycle drawn
/// on a subdivision of the k-cycle, k' = max(t, k).
#[pyfunction]
fn co_matching_rep(t: usize, k: usize) -> PyResult<PyRepresentation> {
    framework::generate_co_matching_rep(t, k)
        .map(|inner| PyRepresentation { inner })
        .map_err(err)
}

/// Seeded random non-crossing representation over a multigraph given as a
/// graph JSON document.
#[pyfunction]
fn random_noncrossing_rep(base_json: &str, n: usize, seed: u64) -> PyResult<PyRepresentation> {
    let dto: GraphDto = parse_json(base_json).map_err(err)?;
    let base = dto.to_multigraph().map_err(err)?;
    framework::random_noncrossing_rep(&base, n, seed)
        .map(|inner| PyRepresentation { inner })
        .map_err(err)
}

/// Proper mixed-thin certificate from a non-crossing representation.
/// Returns (certificate_json, class_count, class_bound).
#[pyfunction]
fn build_mixed_thin(rep: &PyRepresentation) -> PyResult<(String, usize, usize)> {
    let (cert, report) = builder::build_proper_mixed_thin_with_report(&rep.inner).map_err(err)?;
    let dto = MixedCertDto::from_certificate(&cert);
    let text = serde_json::to_string(&dto).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok((text, report.class_count, report.class_bound))
}

/// Check a mixed-thin certificate; None means it passes, otherwise a
/// description of the first violation.
#[pyfunction]
#[pyo3(signature = (graph, cert_json, require_proper = true, inversion_free = false))]
fn check_mixed_thin(
    graph: &PyGraph,
    cert_json: &str,
    require_proper: bool,
    inversion_free: bool,
) -> PyResult<Option<String>> {
    let dto: MixedCertDto = parse_json(cert_json).map_err(err)?;
    let cert = dto.to_certificate();
    let viol = width::check_mixed_thin(&graph.inner, &cert, require_proper, inversion_free)
        .map_err(err)?;
    Ok(viol.map(|v| {
        format!(
            "{} violated on pair {:?} by {:?}",
            v.condition, v.pair, v.vertices
        )
    }))
}

/// Inversion-free proper 2-mixed-thin certificate of a circular
/// representation, as JSON.
#[pyfunction]
fn circ_arc_certificate(rep: &PyRepresentation) -> PyResult<String> {
    let cert = builder::circ_arc_to_if_proper_2mixed(&rep.inner).map_err(err)?;
    serde_json::to_string(&MixedCertDto::from_certificate(&cert))
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Thinness ordering for a representation over a forest: (order, classes).
#[pyfunction]
fn tree_thin(rep: &PyRepresentation) -> PyResult<(Vec<String>, Vec<Vec<String>>)> {
    let cert = tthin::forest_thin_order(&rep.inner).map_err(err)?;
    Ok((cert.order, cert.classes))
}

/// Check a thinness certificate; None means it passes.
#[pyfunction]
#[pyo3(signature = (graph, cert_json, proper = false))]
fn check_thin(graph: &PyGraph, cert_json: &str, proper: bool) -> PyResult<Option<String>> {
    let dto: ThinCertDto = parse_json(cert_json).map_err(err)?;
    let cert = dto.to_certificate();
    let viol = if proper {
        width::check_proper_thin(&graph.inner, &cert).map_err(err)?
    } else {
        width::check_thin(&graph.inner, &cert).map_err(err)?
    };
    Ok(viol.map(|v| format!("triple ({}, {}, {}) reversed={}", v.r, v.s, v.t, v.reversed)))
}

/// Exact thinness of a small graph: (k, order, classes).
#[pyfunction]
#[pyo3(signature = (graph, proper = false, limit = 8))]
fn bruteforce_thinness(
    graph: &PyGraph,
    proper: bool,
    limit: usize,
) -> PyResult<(usize, Vec<String>, Vec<Vec<String>>)> {
    let (k, cert) = width::bruteforce_thinness(&graph.inner, proper, limit).map_err(err)?;
    Ok((k, cert.order, cert.classes))
}

/// Proper representation over an enlarged pattern: (k1, representation).
#[pyfunction]
fn properize(rep: &PyRepresentation) -> PyResult<(usize, PyRepresentation)> {
    let (k1, out) = prop::properize(&rep.inner).map_err(err)?;
    Ok((k1, PyRepresentation { inner: out }))
}

/// Independent-set reduction: ("yes", [witness ids]) or
/// ("reduced", Representation).
#[pyfunction]
fn reduce_is(py: Python<'_>, rep: &PyRepresentation, k: usize) -> PyResult<(String, Py<PyAny>)> {
    match prop::reduce_is_instance(&rep.inner, k).map_err(err)? {
        prop::ReduceOutcome::Yes { witness } => {
            let w: Vec<String> = witness.into_iter().collect();
            Ok(("yes".into(), w.into_py_any(py)?))
        }
        prop::ReduceOutcome::Reduced { rep, .. } => Ok((
            "reduced".into(),
            PyRepresentation { inner: rep }.into_py_any(py)?,
        )),
    }
}

/// Framework-derived vertex order of a representation over a forest.
#[pyfunction]
fn vertex_order(rep: &PyRepresentation) -> PyResult<Vec<String>> {
    let eof =
        ord::EdgeOrderedForest::from_forest(rep.inner.framework().base().clone()).map_err(err)?;
    ord::vertex_order(&rep.inner, &eof).map_err(err)
}

/// Exact twin-width with a witness: (d, steps).
#[pyfunction]
#[pyo3(signature = (graph, limit = 8))]
fn twin_width(graph: &PyGraph, limit: usize) -> PyResult<(usize, Vec<(String, String, String)>)> {
    let (d, seq) = twinwidth::bruteforce_twinwidth(&graph.inner, limit).map_err(err)?;
    Ok((d, seq.steps))
}

/// Validate a contraction sequence (as produced by twin_width) at budget d.
#[pyfunction]
fn check_sequence(
    graph: &PyGraph,
    steps: Vec<(String, String, String)>,
    d: i64,
) -> PyResult<(bool, usize)> {
    let seq = SequenceDto { steps }.to_sequence();
    twinwidth::validate_sequence(&graph.inner, &seq, d).map_err(err)
}

/// Evaluate a first-order formula over the graph.
#[pyfunction]
#[pyo3(signature = (graph, formula, budget = 10_000_000))]
fn fo_eval(graph: &PyGraph, formula: &str, budget: u64) -> PyResult<bool> {
    let f = fo::parse(formula).map_err(err)?;
    fo::evaluate(&graph.inner, &f, budget).map_err(err)
}

/// Evaluate an encoded size-k problem: independent_set, clique or
/// dominating_set.
#[pyfunction]
#[pyo3(signature = (graph, kind, k, budget = 10_000_000))]
fn fo_problem(graph: &PyGraph, kind: &str, k: usize, budget: u64) -> PyResult<bool> {
    let kind = fo::ProblemKind::parse(kind).map_err(err)?;
    let f = fo::encode_problem(kind, k);
    fo::evaluate(&graph.inner, &f, budget).map_err(err)
}

/// Grid rank of a 0/1 matrix given as rows of ints.
#[pyfunction]
#[pyo3(signature = (rows, limit = 20))]
fn grid_rank(rows: Vec<Vec<u8>>, limit: usize) -> PyResult<usize> {
    let bits = ord::BitMatrix::from_rows(
        rows.into_iter()
            .map(|r| r.into_iter().map(|x| x != 0).collect())
            .collect(),
    );
    ord::grid_rank(&bits, limit).map_err(err)
}

#[pymodule]
fn hgraph_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyRepresentation>()?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    m.add_function(wrap_pyfunction!(co_matching_rep, m)?)?;
    m.add_function(wrap_pyfunction!(random_noncrossing_rep, m)?)?;
    m.add_function(wrap_pyfunction!(build_mixed_thin, m)?)?;
    m.add_function(wrap_pyfunction!(check_mixed_thin, m)?)?;
    m.add_function(wrap_pyfunction!(circ_arc_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(tree_thin, m)?)?;
    m.add_function(wrap_pyfunction!(check_thin, m)?)?;
    m.add_function(wrap_pyfunction!(bruteforce_thinness, m)?)?;
    m.add_function(wrap_pyfunction!(properize, m)?)?;
    m.add_function(wrap_pyfunction!(reduce_is, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_order, m)?)?;
    m.add_function(wrap_pyfunction!(twin_width, m)?)?;
    m.add_function(wrap_pyfunction!(check_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(fo_eval, m)?)?;
    m.add_function(wrap_pyfunction!(fo_problem, m)?)?;
    m.add_function(wrap_pyfunction!(grid_rank, m)?)?;
    Ok(())
}
