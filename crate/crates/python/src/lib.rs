use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::Value;

use grasscat_core::catalog::{export_dot, fixture_graph, run_check};
use grasscat_core::cluster::{census as make_census, default_budget, enumerate, EnumerateOptions};
use grasscat_core::profiles::{cyclic_reorderings, is_close_packed};
use grasscat_core::{rankone, subsets, weights, Error, KSubset, Profile, Weight};

create_exception!(grasscat, GrasscatError, PyValueError);
create_exception!(grasscat, BudgetExhausted, GrasscatError);

fn err(e: Error) -> PyErr {
    match e {
        Error::BudgetExhausted(_) => BudgetExhausted::new_err(e.to_string()),
        _ => GrasscatError::new_err(e.to_string()),
    }
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(xs) => {
            let items = xs
                .iter()
                .map(|x| to_py(py, x))
                .collect::<PyResult<Vec<_>>>()?;
            PyList::new(py, items)?.into_any()
        }
        Value::Object(m) => {
            let d = PyDict::new(py);
            for (k, x) in m {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

/// A k-element subset of {1..n}.
#[pyclass(
    name = "KSubset",
    module = "grasscat",
    frozen,
    eq,
    ord,
    hash,
    from_py_object
)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyKSubset(KSubset);

#[pymethods]
impl PyKSubset {
    #[new]
    fn new(elements: Vec<usize>, n: usize) -> PyResult<Self> {
        KSubset::new(n, elements).map(PyKSubset).map_err(err)
    }

    /// Parses `"1,3,5"` or, when n <= 9, `"135"`.
    #[staticmethod]
    fn parse(s: &str, n: usize) -> PyResult<Self> {
        KSubset::parse(s, n).map(PyKSubset).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    #[getter]
    fn elements(&self) -> Vec<usize> {
        self.0.elements().to_vec()
    }

    fn rotate(&self, s: i64) -> Self {
        PyKSubset(self.0.rotate(s))
    }

    fn weakly_separated(&self, other: &PyKSubset) -> PyResult<bool> {
        subsets::weakly_separated(&self.0, &other.0).map_err(err)
    }

    fn is_cyclic_interval(&self) -> bool {
        subsets::is_cyclic_interval(&self.0)
    }

    /// The weight of the Plücker coordinate.
    fn beta(&self) -> PyWeight {
        PyWeight(weights::beta(&self.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("KSubset({:?}, n={})", self.0.elements(), self.0.n())
    }
}

/// A vector in the lattice of integer vectors whose sum is divisible by k.
#[pyclass(name = "Weight", module = "grasscat", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyWeight(Weight);

#[pymethods]
impl PyWeight {
    #[new]
    fn new(k: usize, coords: Vec<i64>) -> PyResult<Self> {
        Weight::new(k, coords).map(PyWeight).map_err(err)
    }

    #[getter]
    fn coords(&self) -> Vec<i64> {
        self.0.coords().to_vec()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.k()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn delta(&self) -> i64 {
        self.0.delta()
    }

    fn qform(&self) -> i64 {
        self.0.qform()
    }

    fn bilinear(&self, other: &PyWeight) -> i64 {
        self.0.bilinear(&other.0)
    }

    /// Coordinates `(a_1..a_{n-1}, d)` in the basis of simple roots and `beta_[n]`.
    fn root_basis(&self) -> (Vec<i64>, i64) {
        let c = weights::to_root_basis(&self.0);
        (c.a, c.d)
    }

    fn __add__(&self, other: &PyWeight) -> Self {
        PyWeight(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PyWeight) -> Self {
        PyWeight(&self.0 - &other.0)
    }

    fn __neg__(&self) -> Self {
        PyWeight(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Weight(k={}, {})", self.0.k(), self.0)
    }
}

/// Stacked contours, top layer first, with offsets in units of two rows.
#[pyclass(name = "Profile", module = "grasscat", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyProfile(Profile);

#[pymethods]
impl PyProfile {
    /// Without offsets the layers are stacked as tightly as possible.
    #[new]
    #[pyo3(signature = (layers, offsets=None))]
    fn new(layers: Vec<PyKSubset>, offsets: Option<Vec<i64>>) -> PyResult<Self> {
        let layers: Vec<KSubset> = layers.into_iter().map(|l| l.0).collect();
        match offsets {
            Some(o) => Profile::new(layers, o),
            None => Profile::stacked(layers),
        }
        .map(PyProfile)
        .map_err(err)
    }

    /// Parses `"137|125"` or `"137:0|125:1"`.
    #[staticmethod]
    fn parse(s: &str, n: usize) -> PyResult<Self> {
        Profile::parse(s, n).map(PyProfile).map_err(err)
    }

    #[getter]
    fn layers(&self) -> Vec<PyKSubset> {
        self.0.layers().iter().cloned().map(PyKSubset).collect()
    }

    #[getter]
    fn offsets(&self) -> Vec<i64> {
        self.0.offsets().to_vec()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn class_(&self) -> PyWeight {
        PyWeight(weights::class_of_profile(&self.0))
    }

    fn is_close_packed(&self) -> bool {
        is_close_packed(&self.0)
    }

    fn cyclic_reorderings(&self) -> Vec<PyProfile> {
        cyclic_reorderings(&self.0)
            .into_iter()
            .map(PyProfile)
            .collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string_with_offsets()
    }

    fn __repr__(&self) -> String {
        format!("Profile({:?})", self.0.to_string_with_offsets())
    }
}

#[pyfunction]
fn weakly_separated(i: &PyKSubset, j: &PyKSubset) -> PyResult<bool> {
    subsets::weakly_separated(&i.0, &j.0).map_err(err)
}

/// Exponents `alpha` with `Hom(L_I, L_J) = Z t^alpha`.
#[pyfunction]
fn hom_min_exponent(i: &PyKSubset, j: &PyKSubset) -> PyResult<Vec<u32>> {
    Ok(rankone::hom_min_exponent(&i.0, &j.0).map_err(err)?.alpha)
}

#[pyfunction]
fn ext_vanishes(i: &PyKSubset, j: &PyKSubset) -> PyResult<bool> {
    rankone::ext_vanishes(&i.0, &j.0).map_err(err)
}

#[pyfunction]
fn ext_dim(i: &PyKSubset, j: &PyKSubset) -> PyResult<usize> {
    rankone::ext_dim(&i.0, &j.0).map_err(err)
}

/// Entries of `D*` as polynomial strings.
#[pyfunction]
fn dstar(i: &PyKSubset, j: &PyKSubset) -> PyResult<Vec<Vec<String>>> {
    let m = rankone::dstar(&i.0, &j.0).map_err(err)?;
    Ok((0..m.rows())
        .map(|r| m.row(r).iter().map(|p| p.to_string()).collect())
        .collect())
}

#[pyfunction]
fn syzygy_profile(i: &PyKSubset) -> PyResult<PyProfile> {
    rankone::syzygy_profile(&i.0).map(PyProfile).map_err(err)
}

#[pyfunction]
fn maximal_weakly_separated(seed: Vec<PyKSubset>, k: usize, n: usize) -> PyResult<Vec<PyKSubset>> {
    let seed: Vec<KSubset> = seed.into_iter().map(|s| s.0).collect();
    Ok(subsets::extend_to_maximal_ws(&seed, k, n)
        .map_err(err)?
        .into_iter()
        .map(PyKSubset)
        .collect())
}

#[pyfunction]
fn enumerate_roots(k: usize, n: usize, d: i64) -> PyResult<Vec<PyWeight>> {
    Ok(weights::enumerate_roots(k, n, d)
        .map_err(err)?
        .into_iter()
        .map(PyWeight)
        .collect())
}

#[pyfunction]
fn finite_type(k: usize, n: usize) -> bool {
    weights::finite_type(k, n)
}

fn run_enumeration(
    py: Python<'_>,
    k: usize,
    n: usize,
    budget: Option<usize>,
) -> PyResult<grasscat_core::cluster::Enumeration> {
    let opts = EnumerateOptions::with_budget(budget.unwrap_or_else(|| default_budget(k, n)));
    py.detach(|| enumerate(k, n, &opts)).map_err(err)
}

/// Every cluster variable as a dict with its weight, degree and Laurent expansion.
#[pyfunction]
#[pyo3(signature = (k, n, budget=None))]
fn enumerate_variables<'py>(
    py: Python<'py>,
    k: usize,
    n: usize,
    budget: Option<usize>,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let e = run_enumeration(py, k, n, budget)?;
    let names: Vec<String> = e.initial_labels.iter().map(|l| format!("P{l}")).collect();
    e.records
        .iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("weight", PyWeight(r.weight.clone()))?;
            d.set_item("degree", r.degree)?;
            d.set_item("frozen", r.frozen)?;
            d.set_item("laurent", r.canonical.display_with(&names))?;
            Ok(d)
        })
        .collect()
}

/// Degree census: `{"degrees": {d: {"count", "weights"}}, "non_roots", "total"}`.
#[pyfunction]
#[pyo3(signature = (k, n, budget=None))]
fn census<'py>(
    py: Python<'py>,
    k: usize,
    n: usize,
    budget: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let e = run_enumeration(py, k, n, budget)?;
    let v = serde_json::to_value(make_census(&e.records))
        .map_err(|e| GrasscatError::new_err(e.to_string()))?;
    to_py(py, &v)
}

/// Runs a fixture check and returns its report.
#[pyfunction]
fn check_fixture<'py>(py: Python<'py>, name: &str) -> PyResult<Bound<'py, PyAny>> {
    let r = py.detach(|| run_check(name)).map_err(err)?;
    let v = serde_json::to_value(&r).map_err(|e| GrasscatError::new_err(e.to_string()))?;
    to_py(py, &v)
}

#[pyfunction]
fn fixture_dot(name: &str) -> PyResult<String> {
    Ok(export_dot(&fixture_graph(name).map_err(err)?))
}

#[pymodule]
fn grasscat(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("GrasscatError", m.py().get_type::<GrasscatError>())?;
    m.add("BudgetExhausted", m.py().get_type::<BudgetExhausted>())?;
    m.add_class::<PyKSubset>()?;
    m.add_class::<PyWeight>()?;
    m.add_class::<PyProfile>()?;
    m.add_function(wrap_pyfunction!(weakly_separated, m)?)?;
    m.add_function(wrap_pyfunction!(hom_min_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(ext_vanishes, m)?)?;
    m.add_function(wrap_pyfunction!(ext_dim, m)?)?;
    m.add_function(wrap_pyfunction!(dstar, m)?)?;
    m.add_function(wrap_pyfunction!(syzygy_profile, m)?)?;
    m.add_function(wrap_pyfunction!(maximal_weakly_separated, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_roots, m)?)?;
    m.add_function(wrap_pyfunction!(finite_type, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_variables, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(check_fixture, m)?)?;
    m.add_function(wrap_pyfunction!(fixture_dot, m)?)?;
    Ok(())
}
