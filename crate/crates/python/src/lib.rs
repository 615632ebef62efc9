//! Python bindings. Matrices cross the boundary as lists of row lists.

use nalgebra::DMatrix;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use edm::harness::{run_experiment, LambdaChoice, NoiseModel, SimConfig};
use edm::{DykstraConfig, EdmError, SymHollowMatrix};

type Rows = Vec<Vec<f64>>;

fn py_err(e: EdmError) -> PyErr {
    match e {
        EdmError::NotConverged(_) => PyRuntimeError::new_err(e.to_string()),
        e => PyValueError::new_err(e.to_string()),
    }
}

fn matrix(rows: &Rows) -> PyResult<DMatrix<f64>> {
    let n = rows.len();
    let nc = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != nc) {
        return Err(PyValueError::new_err("ragged rows"));
    }
    Ok(DMatrix::from_fn(n, nc, |i, j| rows[i][j]))
}

fn rows(m: &DMatrix<f64>) -> Rows {
    (0..m.nrows()).map(|i| m.row(i).iter().copied().collect()).collect()
}

fn hollow(x: &Rows) -> PyResult<SymHollowMatrix> {
    SymHollowMatrix::from_rows(x).map_err(py_err)
}

fn json_to_py<'py>(py: Python<'py>, v: serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn dykstra(tol: f64, max_cycles: usize, feas_tol: f64) -> DykstraConfig {
    DykstraConfig { tol, max_cycles, feas_tol }
}

/// Result of `distance_shrinkage`.
#[pyclass(name = "ShrinkageFit", frozen)]
struct PyShrinkageFit {
    inner: edm::ShrinkageFit,
}

#[pymethods]
impl PyShrinkageFit {
    #[getter]
    fn d_hat(&self) -> Rows {
        rows(self.inner.d_hat.as_matrix())
    }

    #[getter]
    fn k_hat(&self) -> Rows {
        rows(self.inner.k_hat.as_matrix())
    }

    #[getter]
    fn lambda_(&self) -> f64 {
        self.inner.lambda
    }

    #[getter]
    fn eta(&self) -> f64 {
        self.inner.eta
    }

    #[getter]
    fn embed_dim(&self) -> usize {
        self.inner.d_hat.embed_dim()
    }

    #[getter]
    fn diagnostics<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json_to_py(py, serde_json::to_value(self.inner.diagnostics).expect("json"))
    }

    /// Rank-`r` truncation: `(d_hat_r, coordinates)`.
    fn truncate(&self, r: usize) -> PyResult<(Rows, Rows)> {
        let t = edm::truncate_rank(&self.inner, r).map_err(py_err)?;
        Ok((rows(t.d_hat_r.as_matrix()), t.embedding.to_rows()))
    }

    fn __repr__(&self) -> String {
        format!(
            "ShrinkageFit(n={}, lambda={}, embed_dim={}, cycles={})",
            self.inner.d_hat.n(),
            self.inner.lambda,
            self.inner.d_hat.embed_dim(),
            self.inner.diagnostics.cycles
        )
    }
}

/// `(is_edm, embed_dim)`.
#[pyfunction]
#[pyo3(signature = (d, tol = edm::DEFAULT_TOL))]
fn is_edm(d: Rows, tol: f64) -> PyResult<(bool, usize)> {
    let c = edm::is_edm(&hollow(&d)?, tol);
    Ok((c.is_edm, c.embed_dim))
}

/// Squared distances between the rows of `points`.
#[pyfunction]
fn edm_from_points(points: Rows) -> PyResult<Rows> {
    Ok(rows(edm::edm_from_points(&matrix(&points)?).as_matrix()))
}

/// `diag·1ᵀ + 1·diagᵀ − 2K` for a PSD kernel.
#[pyfunction]
#[pyo3(signature = (k, tol = edm::DEFAULT_TOL))]
fn tau_transform(k: Rows, tol: f64) -> PyResult<Rows> {
    let k = edm::KernelMatrix::new(matrix(&k)?, tol).map_err(py_err)?;
    Ok(rows(edm::tau_transform(&k).as_matrix()))
}

/// Minimum-trace kernel `−JDJ/2` of an EDM.
#[pyfunction]
#[pyo3(signature = (d, tol = edm::DEFAULT_TOL))]
fn schoenberg_r(d: Rows, tol: f64) -> PyResult<Rows> {
    let d = edm::EdmMatrix::certify(hollow(&d)?, tol).map_err(py_err)?;
    Ok(rows(edm::schoenberg_r(&d).map_err(py_err)?.as_matrix()))
}

/// Nearest EDM to a symmetric matrix: `(matrix, diagnostics)`.
#[pyfunction]
#[pyo3(signature = (a, tol = 1e-9, max_cycles = 5000, feas_tol = 1e-7))]
fn project_edm_cone<'py>(
    py: Python<'py>,
    a: Rows,
    tol: f64,
    max_cycles: usize,
    feas_tol: f64,
) -> PyResult<(Rows, Bound<'py, PyAny>)> {
    let (d, diag) = edm::project_edm_cone(&matrix(&a)?, &dykstra(tol, max_cycles, feas_tol)).map_err(py_err)?;
    Ok((rows(d.as_matrix()), json_to_py(py, serde_json::to_value(diag).expect("json"))?))
}

#[pyfunction]
#[pyo3(signature = (x, lam, tol = 1e-9, max_cycles = 5000, feas_tol = 1e-7))]
fn distance_shrinkage(x: Rows, lam: f64, tol: f64, max_cycles: usize, feas_tol: f64) -> PyResult<PyShrinkageFit> {
    let fit = edm::distance_shrinkage(&hollow(&x)?, lam, &dykstra(tol, max_cycles, feas_tol)).map_err(py_err)?;
    Ok(PyShrinkageFit { inner: fit })
}

/// Classical MDS at rank `r`: `(d_hat_r, coordinates)`.
#[pyfunction]
fn classical_mds(x: Rows, r: usize) -> PyResult<(Rows, Rows)> {
    let t = edm::classical_mds(&hollow(&x)?, r).map_err(py_err)?;
    Ok((rows(t.d_hat_r.as_matrix()), t.embedding.to_rows()))
}

#[pyfunction]
fn kruskal_stress(est: Rows, truth: Rows) -> PyResult<f64> {
    edm::kruskal_stress(&hollow(&est)?, &hollow(&truth)?).map_err(py_err)
}

#[pyfunction]
fn default_lambda(n: usize, sigma: f64) -> f64 {
    edm::default_lambda(n, sigma)
}

#[pyfunction]
fn oracle_bound(n: usize, sigma: f64, r: usize) -> f64 {
    edm::oracle_bound(n, sigma, r)
}

#[pyfunction]
fn analyze_dim3<'py>(py: Python<'py>, x: Rows) -> PyResult<Bound<'py, PyAny>> {
    let a = edm::analyze_dim3(&hollow(&x)?).map_err(py_err)?;
    json_to_py(py, serde_json::to_value(a).expect("json"))
}

#[pyfunction]
fn similarity_to_dissimilarity(s: Rows) -> PyResult<Rows> {
    Ok(rows(edm::similarity_to_dissimilarity(&matrix(&s)?).map_err(py_err)?.as_matrix()))
}

/// Replicated shrinkage-vs-MDS experiment on the given points. Pass
/// `sigma2=None` for Gamma noise. Returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (points, sigma2, reps = 10, seed = 0, rank = 3, lam = None))]
fn simulate<'py>(
    py: Python<'py>,
    points: Rows,
    sigma2: Option<f64>,
    reps: usize,
    seed: u64,
    rank: usize,
    lam: Option<f64>,
) -> PyResult<Bound<'py, PyAny>> {
    let noise = sigma2.map_or(NoiseModel::Gamma, |sigma2| NoiseModel::Gaussian { sigma2 });
    let mut cfg = SimConfig::new(reps, seed, noise);
    cfg.rank_r = rank;
    if let Some(l) = lam {
        cfg.lambda = LambdaChoice::Lambda(l);
    }
    let truth = edm::edm_from_points(&matrix(&points)?);
    let report = py.detach(|| run_experiment(&truth, &cfg)).map_err(|e| PyValueError::new_err(e.to_string()))?;
    json_to_py(py, serde_json::to_value(&report).expect("json"))
}

#[pymodule]
fn edmshrink(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyShrinkageFit>()?;
    m.add_function(wrap_pyfunction!(is_edm, m)?)?;
    m.add_function(wrap_pyfunction!(edm_from_points, m)?)?;
    m.add_function(wrap_pyfunction!(tau_transform, m)?)?;
    m.add_function(wrap_pyfunction!(schoenberg_r, m)?)?;
    m.add_function(wrap_pyfunction!(project_edm_cone, m)?)?;
    m.add_function(wrap_pyfunction!(distance_shrinkage, m)?)?;
    m.add_function(wrap_pyfunction!(classical_mds, m)?)?;
    m.add_function(wrap_pyfunction!(kruskal_stress, m)?)?;
    m.add_function(wrap_pyfunction!(default_lambda, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_bound, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_dim3, m)?)?;
    m.add_function(wrap_pyfunction!(similarity_to_dissimilarity, m)?)?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    Ok(())
}
