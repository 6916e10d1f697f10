//! Python bindings. Seeds and representations cross the boundary as the same
//! JSON documents the command-line tool reads and writes; reports come back
//! as plain dicts.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;
use sv2_core::classify::MonomialPair;
use sv2_core::fuzz::{self, FuzzConfig};
use sv2_core::rhizome::parse_pattern;
use sv2_core::Error;

create_exception!(sv2, HypothesisError, PyValueError, "Input violates a hypothesis of the operation.");

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Parse(_) | Error::DimensionMismatch(_) => PyValueError::new_err(e.to_string()),
        _ => HypothesisError::new_err(e.to_string()),
    }
}

fn json_err(e: serde_json::Error) -> PyErr {
    PyValueError::new_err(format!("invalid JSON: {e}"))
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(json_err)?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(module = "sv2", frozen)]
struct Seed {
    inner: sv2_core::Seed,
}

#[pymethods]
impl Seed {
    /// Parses a seed document: `{"k": .., "l": .., "S": [[..]], "ab": [..]}`.
    #[new]
    fn new(json: &str) -> PyResult<Self> {
        let inner: sv2_core::Seed = serde_json::from_str(json).map_err(json_err)?;
        inner.check_shape().map_err(py_err)?;
        Ok(Seed { inner })
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k
    }

    #[getter]
    fn l(&self) -> usize {
        self.inner.l
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(json_err)
    }

    fn build(&self) -> PyResult<Rep> {
        Ok(Rep {
            inner: sv2_core::build_v(&self.inner).map_err(py_err)?,
        })
    }

    fn rhizome<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &sv2_core::analyze(&self.inner.s))
    }

    fn indecomposable<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &sv2_core::indecomposable(&self.inner).map_err(py_err)?)
    }

    /// Byte-stable JSON of the orbit representative.
    fn canonical_form(&self) -> PyResult<String> {
        Ok(sv2_core::canonical_form(&self.inner).map_err(py_err)?.to_json())
    }

    fn isomorphic(&self, other: &Seed) -> PyResult<bool> {
        Ok(sv2_core::isomorphic(&self.inner, &other.inner).map_err(py_err)?.isomorphic)
    }

    /// Acts by a monomial pair `{"sigma": [..], "xi": [..], "tau": [..], "phi": [..]}`
    /// with 0-based permutations.
    fn act(&self, group_json: &str) -> PyResult<Seed> {
        let g: MonomialPair = serde_json::from_str(group_json).map_err(json_err)?;
        Ok(Seed {
            inner: sv2_core::group_act(&g, &self.inner).map_err(py_err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("Seed(k={}, l={})", self.inner.k, self.inner.l)
    }
}

#[pyclass(module = "sv2", frozen)]
struct Rep {
    inner: sv2_core::Rep,
}

#[pymethods]
impl Rep {
    #[new]
    fn new(json: &str) -> PyResult<Self> {
        let inner: sv2_core::Rep = serde_json::from_str(json).map_err(json_err)?;
        inner.check_shape().map_err(py_err)?;
        Ok(Rep { inner })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(json_err)
    }

    /// The nine defining relations; `hecke=True` checks the four Hecke ones.
    #[pyo3(signature = (hecke = false))]
    fn verify<'py>(&self, py: Python<'py>, hecke: bool) -> PyResult<Bound<'py, PyAny>> {
        let report = if hecke {
            sv2_core::verify_hdeg(&self.inner)
        } else {
            sv2_core::verify_sv2(&self.inner)
        };
        to_py(py, &report.map_err(py_err)?)
    }

    fn e_is_zero(&self) -> bool {
        sv2_core::e_is_zero(&self.inner)
    }

    fn endo<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &sv2_core::endo_report(&self.inner).map_err(py_err)?)
    }

    fn split<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &sv2_core::split_weight_blocks(&self.inner).map_err(py_err)?)
    }

    fn split_t<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &sv2_core::split_t(&self.inner).map_err(py_err)?)
    }

    fn __repr__(&self) -> String {
        format!("Rep(k={}, l={})", self.inner.k, self.inner.l)
    }
}

/// Zero-pattern analysis of a `.`/`*` grid.
#[pyfunction]
fn analyze_pattern<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &sv2_core::analyze(&parse_pattern(text).map_err(py_err)?))
}

#[pyfunction]
#[pyo3(signature = (kmax = 4, lmax = 4, trials = 50, seed = 0))]
fn run_fuzz<'py>(py: Python<'py>, kmax: usize, lmax: usize, trials: usize, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    let report = fuzz::run(&FuzzConfig { kmax, lmax, trials, seed }).map_err(py_err)?;
    to_py(py, &report)
}

#[pymodule]
#[pyo3(name = "sv2")]
fn sv2_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Seed>()?;
    m.add_class::<Rep>()?;
    m.add_function(wrap_pyfunction!(analyze_pattern, m)?)?;
    m.add_function(wrap_pyfunction!(run_fuzz, m)?)?;
    m.add("HypothesisError", m.py().get_type::<HypothesisError>())?;
    Ok(())
}
