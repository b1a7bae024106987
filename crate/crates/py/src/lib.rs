//! Python bindings for the modified-Jacobi asymptotics library.
//!
//! Exposes the weight specification, the quadrature-based recurrence oracle,
//! and the closed-form predictions (outer, bulk, edge, zeros) plus the
//! convergence studies.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use modjac::convergence::ConvergenceReport;
use modjac::ortho_oracle::{
    eval_monic, eval_monic_real, hankel_log_det, polynomial_zeros, stieltjes_recurrence,
    RecurrenceTable,
};
use modjac::rh_asymptotics::{
    asym_coeffs, bulk_prediction, edge_prediction, hankel_asymptotic, largest_zero_prediction,
    outer_prediction, study_an, study_bn, study_bulk, study_edge, study_gamma, study_hankel,
    study_outer, zero_convergence_check,
};
use modjac::szego_maps::SzegoData;
use modjac::weight::{HKind, WeightSpec};

fn err(e: modjac::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_kind(kind: &str) -> PyResult<HKind> {
    match kind {
        "constant" => Ok(HKind::Constant),
        "exp_poly" => Ok(HKind::ExpPoly),
        "positive_poly" => Ok(HKind::PositivePoly),
        other => Err(PyValueError::new_err(format!(
            "unknown h kind {other:?}; expected constant, exp_poly, or positive_poly"
        ))),
    }
}

fn report_to_dict<'py>(py: Python<'py>, r: &ConvergenceReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new_bound(py);
    d.set_item("quantity", &r.quantity)?;
    d.set_item("n", &r.n)?;
    d.set_item("error", &r.error)?;
    d.set_item("fitted_slope", r.fitted_slope)?;
    d.set_item("target_slope", r.target_slope)?;
    d.set_item("constant_estimate", r.constant_estimate)?;
    d.set_item("pass", r.pass)?;
    Ok(d)
}

/// A modified Jacobi weight (1-x)^alpha (1+x)^beta h(x) together with its
/// Szegő-function data.
#[pyclass]
struct Weight {
    data: SzegoData,
}

#[pymethods]
impl Weight {
    #[new]
    #[pyo3(signature = (alpha, beta, kind = "constant", coeffs = vec![1.0]))]
    fn new(alpha: f64, beta: f64, kind: &str, coeffs: Vec<f64>) -> PyResult<Self> {
        let spec = WeightSpec::new(alpha, beta, parse_kind(kind)?, coeffs).map_err(err)?;
        Ok(Self { data: SzegoData::new(&spec).map_err(err)? })
    }

    #[staticmethod]
    fn legendre() -> PyResult<Self> {
        Ok(Self { data: SzegoData::new(&WeightSpec::legendre()).map_err(err)? })
    }

    #[staticmethod]
    fn chebyshev() -> PyResult<Self> {
        Ok(Self { data: SzegoData::new(&WeightSpec::chebyshev()).map_err(err)? })
    }

    #[getter]
    fn alpha(&self) -> f64 {
        self.data.spec.alpha
    }

    #[getter]
    fn beta(&self) -> f64 {
        self.data.spec.beta
    }

    #[getter]
    fn d_inf(&self) -> f64 {
        self.data.d_inf
    }

    /// All closed-form expansion constants as a dict.
    fn coefficients<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let co = asym_coeffs(&self.data);
        let d = PyDict::new_bound(py);
        d.set_item("Gamma1", co.gamma1)?;
        d.set_item("Gamma2", co.gamma2)?;
        d.set_item("A2", co.a2)?;
        d.set_item("A3", co.a3)?;
        d.set_item("A4", co.a4)?;
        d.set_item("B2", co.b2)?;
        d.set_item("B3", co.b3)?;
        d.set_item("B4", co.b4)?;
        d.set_item("hankel_exponent", co.hankel_exponent)?;
        d.set_item("D_inf", co.d_inf)?;
        d.set_item("c0", co.c0)?;
        d.set_item("d0", co.d0)?;
        Ok(d)
    }

    /// Quadrature-based recurrence table up to degree n.
    fn recurrence(&self, n: usize) -> PyResult<Recurrence> {
        Ok(Recurrence { table: stieltjes_recurrence(&self.data.spec, n).map_err(err)? })
    }

    /// Predicted monic polynomial off [-1,1] as (log_abs, unit): the value is
    /// exp(log_abs) * unit.
    #[pyo3(signature = (z, n, order = 2))]
    fn outer(&self, z: Complex64, n: usize, order: usize) -> PyResult<(f64, Complex64)> {
        let v = outer_prediction(&self.data, z, n, order).map_err(err)?;
        Ok((v.log_abs, v.unit))
    }

    /// Predicted monic polynomial at an interior point |x| < 0.9.
    fn bulk(&self, x: f64, n: usize) -> PyResult<f64> {
        bulk_prediction(&self.data, x, n).map_err(err)
    }

    /// Predicted monic polynomial in the right edge window 0.9 < x < 1.
    fn edge(&self, x: f64, n: usize) -> PyResult<f64> {
        edge_prediction(&self.data, x, n).map_err(err)
    }

    /// Predicted k-th largest zero of the degree-n polynomial (k <= 5).
    fn largest_zero(&self, n: usize, k: usize) -> PyResult<f64> {
        largest_zero_prediction(self.data.spec.alpha, n, k).map_err(err)
    }

    /// Predicted log Hankel determinant and its log n coefficient.
    fn hankel(&self, n: usize) -> (f64, f64) {
        hankel_asymptotic(&asym_coeffs(&self.data), n)
    }

    /// Convergence-rate study of a predicted quantity against the oracle.
    /// quantity: outer | gamma | an | bn | hankel | bulk | edge | zeros.
    #[pyo3(signature = (quantity, ns, z = None, x = 0.2, k = 1, order = 2))]
    fn convergence<'py>(
        &self,
        py: Python<'py>,
        quantity: &str,
        ns: Vec<usize>,
        z: Option<Complex64>,
        x: f64,
        k: usize,
        order: usize,
    ) -> PyResult<Bound<'py, PyDict>> {
        if ns.len() < 2 || ns.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PyValueError::new_err("ns must be strictly increasing with >= 2 entries"));
        }
        let table = stieltjes_recurrence(&self.data.spec, ns.last().unwrap() + 2).map_err(err)?;
        let report = match quantity {
            "outer" => {
                let z = z.unwrap_or(Complex64::new(1.5, 0.5));
                study_outer(&self.data, &table, z, order, &ns)
            }
            "gamma" => study_gamma(&self.data, &table, &ns),
            "an" => study_an(&self.data, &table, &ns),
            "bn" => study_bn(&self.data, &table, &ns),
            "hankel" => study_hankel(&self.data, &table, &ns),
            "bulk" => study_bulk(&self.data, &table, x, &ns),
            "edge" => study_edge(&self.data, &table, &ns),
            "zeros" => zero_convergence_check(&table, self.data.spec.alpha, &ns, k),
            other => return Err(PyValueError::new_err(format!("unknown quantity {other:?}"))),
        }
        .map_err(err)?;
        report_to_dict(py, &report)
    }
}

/// Recurrence coefficients of the monic orthogonal polynomials, computed by
/// Gauss-Jacobi quadrature; the independent reference the predictions are
/// tested against.
#[pyclass]
struct Recurrence {
    table: RecurrenceTable,
}

#[pymethods]
impl Recurrence {
    #[getter]
    fn n_max(&self) -> usize {
        self.table.n_max
    }

    fn a(&self, n: usize) -> PyResult<f64> {
        if n == 0 || n > self.table.n_max {
            return Err(PyValueError::new_err(format!("a_n needs 1 <= n <= {}", self.table.n_max)));
        }
        Ok(self.table.a(n))
    }

    fn b(&self, n: usize) -> PyResult<f64> {
        if n > self.table.n_max {
            return Err(PyValueError::new_err(format!("b_n needs n <= {}", self.table.n_max)));
        }
        Ok(self.table.b(n))
    }

    fn log_gamma(&self, n: usize) -> PyResult<f64> {
        if n > self.table.n_max {
            return Err(PyValueError::new_err(format!("log_gamma needs n <= {}", self.table.n_max)));
        }
        Ok(self.table.log_gamma(n))
    }

    /// Monic polynomial value at a complex point as (log_abs, unit).
    fn eval(&self, n: usize, z: Complex64) -> PyResult<(f64, Complex64)> {
        let v = eval_monic(&self.table, n, z).map_err(err)?;
        Ok((v.log_abs, v.unit))
    }

    /// Monic polynomial value at a real point.
    fn eval_real(&self, n: usize, x: f64) -> PyResult<f64> {
        eval_monic_real(&self.table, n, x).map_err(err)
    }

    /// Zeros of the degree-n polynomial, largest first.
    fn zeros(&self, n: usize) -> PyResult<Vec<f64>> {
        polynomial_zeros(&self.table, n).map_err(err)
    }

    /// log of the n-th Hankel determinant of the weight's moments.
    fn hankel_log_det(&self, n: usize) -> PyResult<f64> {
        hankel_log_det(&self.table, n).map_err(err)
    }
}

#[pymodule]
fn pymodjac(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Weight>()?;
    m.add_class::<Recurrence>()?;
    Ok(())
}
