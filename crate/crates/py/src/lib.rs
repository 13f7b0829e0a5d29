//! Python bindings for the goursat-core invariant library.
//!
//! Exposes the three main types (derived vectors, letter codes, Puiseux
//! characteristics), the plane-branch reader, and the census entry points.
//! Library errors surface as `ValueError`, overflow as `OverflowError`.

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use goursat_core::census;
use goursat_core::codes;
use goursat_core::curves;
use goursat_core::formula;
use goursat_core::puiseux;
use goursat_core::recursion;
use goursat_core::vectors;

fn to_py_err(err: goursat_core::Error) -> PyErr {
    match err {
        goursat_core::Error::Overflow(_) => PyOverflowError::new_err(err.to_string()),
        _ => PyValueError::new_err(err.to_string()),
    }
}

/// A derived vector: positive, non-decreasing entries.
#[pyclass(name = "DerivedVector")]
struct PyDerivedVector {
    inner: vectors::DerivedVector,
}

#[pymethods]
impl PyDerivedVector {
    #[new]
    fn new(entries: Vec<u64>) -> PyResult<Self> {
        let inner = vectors::DerivedVector::from_flat(&entries).map_err(to_py_err)?;
        Ok(PyDerivedVector { inner })
    }

    /// Build from (value, count) runs, e.g. [(1, 2), (2, 6), (4, 1)].
    #[staticmethod]
    fn from_blocks(pairs: Vec<(u64, u64)>) -> PyResult<Self> {
        let inner = vectors::DerivedVector::from_blocks(&pairs).map_err(to_py_err)?;
        Ok(PyDerivedVector { inner })
    }

    /// Collapse a small growth vector, e.g. [2, 3, 4, 4, 5].
    #[staticmethod]
    fn from_sgv(dims: Vec<u64>) -> PyResult<Self> {
        let sgv = vectors::SmallGrowthVector::new(dims).map_err(to_py_err)?;
        Ok(PyDerivedVector { inner: sgv.to_derived() })
    }

    #[getter]
    fn flat(&self) -> PyResult<Vec<u64>> {
        self.inner.flat().map_err(to_py_err)
    }

    #[getter]
    fn blocks(&self) -> Vec<(u64, u64)> {
        self.inner.block_pairs()
    }

    #[getter]
    fn level(&self) -> u64 {
        self.inner.level()
    }

    #[getter]
    fn critical(&self) -> bool {
        self.inner.is_critical()
    }

    /// The small growth vector as a list of flag dimensions.
    fn to_sgv(&self) -> PyResult<Vec<u64>> {
        Ok(self.inner.to_sgv().map_err(to_py_err)?.dims().to_vec())
    }

    /// The unique letter code, if the vector is realizable.
    fn to_code(&self) -> PyResult<PyRvtCode> {
        let inner = codes::derived_to_rvt(&self.inner).map_err(to_py_err)?;
        Ok(PyRvtCode { inner })
    }

    /// Puiseux characteristic via the direct formula.
    fn puiseux(&self) -> PyResult<PyPuiseuxCharacteristic> {
        let inner = formula::puiseux_from_derived(&self.inner).map_err(to_py_err)?;
        Ok(PyPuiseuxCharacteristic { inner })
    }

    /// Drop the last characteristic stage; returns (beta, s, omega).
    fn truncate_last_stage(&self) -> PyResult<(PyDerivedVector, u64, String)> {
        let t = codes::truncate_last_stage(&self.inner).map_err(to_py_err)?;
        Ok((PyDerivedVector { inner: t.beta.clone() }, t.s, t.omega_word()))
    }

    /// Level, ambient dimension, growth-vector length, v and g.
    fn geometry<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let geo = self.inner.geometry().map_err(to_py_err)?;
        let dict = PyDict::new(py);
        dict.set_item("level", geo.level)?;
        dict.set_item("dim", geo.dim)?;
        dict.set_item("sgv_length", geo.sgv_length)?;
        dict.set_item("v", geo.v)?;
        dict.set_item("g", geo.g)?;
        Ok(dict)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("DerivedVector([{}])", self.inner)
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other
            .extract::<PyRef<'_, Self>>()
            .is_ok_and(|o| o.inner == self.inner)
    }
}

/// A grammar-checked letter code over R, V, T.
#[pyclass(name = "RvtCode")]
struct PyRvtCode {
    inner: codes::RvtCode,
}

#[pymethods]
impl PyRvtCode {
    #[new]
    fn new(word: &str) -> PyResult<Self> {
        let inner = codes::RvtCode::parse(word).map_err(to_py_err)?;
        Ok(PyRvtCode { inner })
    }

    #[getter]
    fn word(&self) -> String {
        self.inner.word()
    }

    #[getter]
    fn level(&self) -> u64 {
        self.inner.level()
    }

    #[getter]
    fn critical(&self) -> bool {
        self.inner.is_critical()
    }

    /// The derived vector this code names.
    fn to_derived(&self) -> PyResult<PyDerivedVector> {
        let inner = codes::rvt_to_derived(&self.inner).map_err(to_py_err)?;
        Ok(PyDerivedVector { inner })
    }

    /// Puiseux characteristic via the stage recursion.
    fn puiseux(&self) -> PyResult<PyPuiseuxCharacteristic> {
        let inner = recursion::puiseux_from_rvt(&self.inner).map_err(to_py_err)?;
        Ok(PyPuiseuxCharacteristic { inner })
    }

    /// Run lengths read right to left: {"v": ..., "t": [...], "r": [...]}.
    fn profile<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let p = self.inner.profile();
        let dict = PyDict::new(py);
        dict.set_item("v", p.v)?;
        dict.set_item("t", p.t)?;
        dict.set_item("r", p.r)?;
        Ok(dict)
    }

    /// R-run lengths and critical strings, for critical codes.
    fn split(&self) -> PyResult<(Vec<u64>, Vec<String>)> {
        let d = recursion::split_code(&self.inner).map_err(to_py_err)?;
        let strings = d.strings.iter().map(|s| codes::word_of(s)).collect();
        Ok((d.runs, strings))
    }

    fn __str__(&self) -> String {
        self.inner.word()
    }

    fn __repr__(&self) -> String {
        format!("RvtCode(\"{}\")", self.inner.word())
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other
            .extract::<PyRef<'_, Self>>()
            .is_ok_and(|o| o.inner == self.inner)
    }
}

/// The invariant [lambda0; lambda1, ..., lambdag].
#[pyclass(name = "PuiseuxCharacteristic")]
struct PyPuiseuxCharacteristic {
    inner: puiseux::PuiseuxCharacteristic,
}

#[pymethods]
impl PyPuiseuxCharacteristic {
    #[new]
    fn new(lambda0: u64, exponents: Vec<u64>) -> PyResult<Self> {
        let inner = puiseux::PuiseuxCharacteristic::new(lambda0, exponents).map_err(to_py_err)?;
        Ok(PyPuiseuxCharacteristic { inner })
    }

    #[getter]
    fn lambda0(&self) -> u64 {
        self.inner.lambda0()
    }

    #[getter]
    fn exponents(&self) -> Vec<u64> {
        self.inner.exponents().to_vec()
    }

    #[getter]
    fn g(&self) -> usize {
        self.inner.g()
    }

    /// The chain e0 = lambda0, e_j = gcd(e_{j-1}, lambda_j), ending in 1.
    fn gcd_chain(&self) -> Vec<u64> {
        self.inner.gcd_chain()
    }

    /// The smallest branch support realizing this characteristic, as
    /// (multiplicity, exponents).
    fn witness(&self) -> (u64, Vec<u64>) {
        let support = curves::witness_exponents(&self.inner);
        (support.multiplicity(), support.exponents().to_vec())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "PuiseuxCharacteristic({}, {:?})",
            self.inner.lambda0(),
            self.inner.exponents()
        )
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        other
            .extract::<PyRef<'_, Self>>()
            .is_ok_and(|o| o.inner == self.inner)
    }
}

/// Puiseux characteristic of the plane branch (t^m, sum of t^k over the
/// exponent list).
#[pyfunction]
fn puiseux_from_branch(multiplicity: u64, exponents: Vec<u64>) -> PyResult<PyPuiseuxCharacteristic> {
    let branch = curves::BranchSupport::new(multiplicity, exponents).map_err(to_py_err)?;
    let inner = curves::puiseux_from_exponents(&branch).map_err(to_py_err)?;
    Ok(PyPuiseuxCharacteristic { inner })
}

/// True when the multiplicity and all exponents are globally coprime.
#[pyfunction]
fn is_well_parametrized(multiplicity: u64, exponents: Vec<u64>) -> PyResult<bool> {
    let branch = curves::BranchSupport::new(multiplicity, exponents).map_err(to_py_err)?;
    Ok(curves::is_well_parametrized(&branch))
}

/// All valid codes of levels 2 through max_level, in level-then-lex order.
#[pyfunction]
#[pyo3(signature = (max_level, only_critical = false))]
fn enumerate_codes(max_level: u64, only_critical: bool) -> Vec<PyRvtCode> {
    census::CodeEnumerator::new(max_level, only_critical)
        .map(|inner| PyRvtCode { inner })
        .collect()
}

/// Run the full identity suite over every code up to max_level.
///
/// Returns a dict with counts, per-level tallies, Fibonacci extremes, the
/// failure list (empty on a clean run) and the elapsed time in seconds.
#[pyfunction]
fn cross_validate<'py>(py: Python<'py>, max_level: u64) -> PyResult<Bound<'py, PyDict>> {
    let report = census::cross_validate(max_level).map_err(to_py_err)?;
    let dict = PyDict::new(py);
    dict.set_item("max_level", report.max_level)?;
    dict.set_item("total", report.total_codes())?;
    dict.set_item("critical", report.total_critical())?;
    dict.set_item("clean", report.is_clean())?;
    dict.set_item("elapsed_seconds", report.elapsed.as_secs_f64())?;
    let levels: Vec<(u64, u64, u64)> = report
        .levels
        .iter()
        .map(|l| (l.level, l.total, l.critical))
        .collect();
    dict.set_item("levels", levels)?;
    let extremes: Vec<(u64, u64, u64, String)> = report
        .fib_extremes
        .iter()
        .map(|e| (e.level, e.bound, e.max_sgv_length, e.code.clone()))
        .collect();
    dict.set_item("fib_extremes", extremes)?;
    let failures: Vec<(String, String, String, String)> = report
        .failures
        .iter()
        .map(|v| (v.code.clone(), v.check.clone(), v.left.clone(), v.right.clone()))
        .collect();
    dict.set_item("failures", failures)?;
    Ok(dict)
}

/// Per-level maxima of the growth-vector length, as
/// (level, bound, max_sgv_length, code) tuples.
#[pyfunction]
fn fibonacci_extremes(max_level: u64) -> PyResult<Vec<(u64, u64, u64, String)>> {
    let extremes = census::fibonacci_extremes(max_level).map_err(to_py_err)?;
    Ok(extremes
        .into_iter()
        .map(|e| (e.level, e.bound, e.max_sgv_length, e.code))
        .collect())
}

#[pymodule]
fn goursat_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDerivedVector>()?;
    m.add_class::<PyRvtCode>()?;
    m.add_class::<PyPuiseuxCharacteristic>()?;
    m.add_function(wrap_pyfunction!(puiseux_from_branch, m)?)?;
    m.add_function(wrap_pyfunction!(is_well_parametrized, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_codes, m)?)?;
    m.add_function(wrap_pyfunction!(cross_validate, m)?)?;
    m.add_function(wrap_pyfunction!(fibonacci_extremes, m)?)?;
    Ok(())
}
