//! Python bindings for the conformable calculus crate.

use conformable::conformable::Order;
use conformable::eigenbasis;
use conformable::error::Error;
use conformable::quantum;
use conformable::susy;
use conformable::transforms::{self, TransformOrder, CATALOG_NAMES};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use std::sync::Arc;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyfunction]
fn to_natural(x: f64, alpha: f64) -> PyResult<f64> {
    Ok(conformable::conformable::to_natural(x, Order::new(alpha).map_err(err)?))
}

#[pyfunction]
fn from_natural(u: f64, alpha: f64) -> PyResult<f64> {
    Ok(conformable::conformable::from_natural(u, Order::new(alpha).map_err(err)?))
}

/// Eigenbasis of the self-adjoint conformable box operator on [0, 1].
#[pyclass(name = "JBasis")]
struct PyJBasis {
    inner: eigenbasis::JBasis,
}

#[pymethods]
impl PyJBasis {
    #[new]
    fn new(alpha: f64, max_n: usize) -> PyResult<Self> {
        let ord = Order::new(alpha).map_err(err)?;
        Ok(Self { inner: eigenbasis::JBasis::new(ord, max_n).map_err(err)? })
    }

    #[getter]
    fn alpha(&self) -> f64 {
        self.inner.order().alpha()
    }

    #[getter]
    fn max_n(&self) -> usize {
        self.inner.max_n()
    }

    fn eval(&self, n: usize, x: f64) -> PyResult<f64> {
        self.inner.eval(n, x).map_err(err)
    }

    fn eigenvalue(&self, n: usize) -> PyResult<f64> {
        self.inner.eigenvalue(n).map_err(err)
    }

    fn zero_position(&self, n: usize, k: usize) -> PyResult<f64> {
        self.inner.zero_position(n, k).map_err(err)
    }

    fn bessel_zero(&self, n: usize) -> PyResult<f64> {
        self.inner.bessel_zero(n).map_err(err)
    }

    /// Central moments and root-moment shape statistics of level n as a dict.
    fn moment_stats<'py>(&self, py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
        let s = self.inner.moment_stats(n).map_err(err)?;
        let d = pyo3::types::PyDict::new(py);
        d.set_item("mean", s.moments[0])?;
        d.set_item("m2", s.moments[1])?;
        d.set_item("m3", s.moments[2])?;
        d.set_item("m4", s.moments[3])?;
        d.set_item("std_dev", s.std_dev)?;
        d.set_item("skewness", s.skewness)?;
        d.set_item("kurtosis", s.kurtosis)?;
        Ok(d.into_any())
    }
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    CATALOG_NAMES.to_vec()
}

/// Closed-form and quadrature Laplace values for one catalog entry.
#[pyfunction]
fn laplace_entry(name: &str, alpha: f64, beta: f64, s: f64) -> PyResult<(f64, f64)> {
    let entry = transforms::table_entry(name).map_err(err)?;
    let ord = TransformOrder::new(alpha, beta).map_err(err)?;
    let tf = entry.time_function(&ord);
    let closed = entry.laplace_canonical(&ord, s).map_err(err)?;
    let quad = transforms::conformable_laplace(&tf, &ord, s).map_err(err)?;
    Ok((closed, quad))
}

/// Superpartner system of the conformable box.
#[pyclass(name = "SusyBox")]
struct PySusyBox {
    inner: Arc<susy::SusySystem>,
}

#[pymethods]
impl PySusyBox {
    #[new]
    #[pyo3(signature = (alpha, ordering = "symmetric"))]
    fn new(alpha: f64, ordering: &str) -> PyResult<Self> {
        let ord = Order::new(alpha).map_err(err)?;
        let sys = match ordering {
            "symmetric" => susy::SusySystem::symmetric_box(ord).map_err(err)?,
            "asymmetric" => susy::SusySystem::asymmetric_box(ord).map_err(err)?,
            other => {
                return Err(PyValueError::new_err(format!(
                    "ordering must be symmetric or asymmetric, got {other}"
                )))
            }
        };
        Ok(Self { inner: Arc::new(sys) })
    }

    fn w(&self, x: f64) -> PyResult<f64> {
        self.inner.w(x).map_err(err)
    }

    fn v1(&self, x: f64) -> PyResult<f64> {
        self.inner.v1(x).map_err(err)
    }

    fn v2(&self, x: f64) -> PyResult<f64> {
        self.inner.v2(x).map_err(err)
    }

    fn phi(&self, n: usize, x: f64) -> PyResult<f64> {
        self.inner.phi(n, x).map_err(err)
    }

    fn partner_state(&self, n: usize, x: f64) -> PyResult<f64> {
        self.inner.partner_state(n).map_err(err)?.eval(x).map_err(err)
    }

    fn ladder1(&self, n: usize) -> PyResult<f64> {
        self.inner.ladder1(n).map_err(err)
    }

    fn ladder2(&self, n: usize) -> PyResult<f64> {
        self.inner.ladder2(n).map_err(err)
    }
}

/// Phantom trial-potential fits ranked best-first:
/// list of (label, exponent, lambda_opt, l2_residual).
#[pyfunction]
fn phantom_ranking(alpha: f64) -> PyResult<Vec<(String, f64, f64, f64)>> {
    let ord = Order::new(alpha).map_err(err)?;
    let fits = quantum::phantom_potential_ranking(ord).map_err(err)?;
    Ok(fits
        .into_iter()
        .map(|f| (f.trial.label().to_string(), f.trial.exponent(alpha), f.lambda_opt, f.l2_residual))
        .collect())
}

/// First-order wall corrections per alpha: list of (alpha, left, right, difference).
#[pyfunction]
fn wall_asymmetry(alphas: Vec<f64>) -> PyResult<Vec<(f64, f64, f64, f64)>> {
    let scan = quantum::wall_asymmetry_scan(&alphas).map_err(err)?;
    Ok(scan
        .rows
        .into_iter()
        .map(|r| (r.alpha, r.left_correction, r.right_correction, r.difference))
        .collect())
}

#[pymodule]
fn conformable_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyJBasis>()?;
    m.add_class::<PySusyBox>()?;
    m.add_function(wrap_pyfunction!(to_natural, m)?)?;
    m.add_function(wrap_pyfunction!(from_natural, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    m.add_function(wrap_pyfunction!(laplace_entry, m)?)?;
    m.add_function(wrap_pyfunction!(phantom_ranking, m)?)?;
    m.add_function(wrap_pyfunction!(wall_asymmetry, m)?)?;
    Ok(())
}
