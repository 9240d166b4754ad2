use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use polarlab::error::PolarError;
use polarlab::harness::{self, DEFAULT_SEED};
use polarlab::io::{parse_json, ConstraintSet, Operator, UniverseDoc};
use polarlab::maximality::{greedy_maximal_extension, is_d_maximal};
use polarlab::model1d::{pw_classify, pw_is_d_maximal, pw_polar};
use polarlab::operator::{classify, Pair, PolarKind};
use polarlab::polar::{operator_polar_member, operator_zero_polar_member, polar_fiber_1d, pw_zero_polar_set};
use polarlab::rational::Rational;
use polarlab::vector::Vector;
use polarlab::vip::{self, john_equivalence, polar_vip, Which, JOHN_DEFAULT_MAX_DOM};

fn err(e: PolarError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Serialize through JSON so Python gets plain dicts, lists and strings.
fn to_py<'py, T: Serialize>(py: Python<'py>, t: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(t).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn kind(name: &str) -> PyResult<PolarKind> {
    match name.to_ascii_lowercase().as_str() {
        "mu" | "mono" => Ok(PolarKind::Mono),
        "rho" | "pseudo" => Ok(PolarKind::Pseudo),
        "nu" | "quasi" => Ok(PolarKind::Quasi),
        _ => Err(PyValueError::new_err(format!("unknown polar kind {name:?}; use mu, rho or nu"))),
    }
}

fn which(name: &str) -> PyResult<Which> {
    match name {
        "S" | "s" => Ok(Which::S),
        "M" | "m" => Ok(Which::M),
        _ => Err(PyValueError::new_err("which must be \"S\" or \"M\"")),
    }
}

// ints, Fractions and strings all go through str()
fn rational(v: &Bound<'_, PyAny>) -> PyResult<Rational> {
    v.str()?.to_str()?.parse().map_err(err)
}

fn vector(v: &Bound<'_, PyAny>) -> PyResult<Vector> {
    if let Ok(items) = v.try_iter() {
        if !v.is_instance_of::<pyo3::types::PyString>() {
            let coords = items.map(|c| rational(&c?)).collect::<PyResult<Vec<_>>>()?;
            return Vector::new(coords).map_err(err);
        }
    }
    Ok(Vector::scalar(rational(v)?))
}

/// An exact operator: finitely many pairs, or a piecewise operator on the line.
#[pyclass(name = "Operator", module = "polarlab", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyOperator {
    inner: Operator,
}

#[pymethods]
impl PyOperator {
    #[new]
    fn new(json: &str) -> PyResult<Self> {
        Ok(PyOperator { inner: parse_json(json).map_err(err)? })
    }

    #[staticmethod]
    fn fixture(name: &str) -> PyResult<Self> {
        polarlab::fixtures::fixture(name)
            .map(|inner| PyOperator { inner })
            .ok_or_else(|| PyKeyError::new_err(name.to_string()))
    }

    #[staticmethod]
    fn fixtures() -> Vec<&'static str> {
        polarlab::fixtures::FIXTURE_IDS.to_vec()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> PyResult<String> {
        Ok(format!("Operator({})", self.to_json()?))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        match &self.inner {
            Operator::Finite(t) => to_py(py, &classify(t)),
            Operator::Pw1d(t) => {
                let c = pw_classify(t);
                to_py(
                    py,
                    &serde_json::json!({
                        "monotone": c.monotone.holds,
                        "quasimonotone": c.quasimonotone.holds,
                        "pseudomonotone": c.pseudomonotone.holds,
                    }),
                )
            }
        }
    }

    #[pyo3(signature = (x, xs, kind = "rho"))]
    fn polar_member(&self, x: &Bound<'_, PyAny>, xs: &Bound<'_, PyAny>, kind: &str) -> PyResult<bool> {
        let p = Pair::new(vector(x)?, vector(xs)?).map_err(err)?;
        operator_polar_member(&self.inner, &p, self::kind(kind)?).map_err(err)
    }

    /// The whole polar, for operators on the line.
    #[pyo3(signature = (kind = "rho"))]
    fn polar(&self, kind: &str) -> PyResult<Self> {
        let pw = self.inner.to_pw().map_err(err)?;
        Ok(PyOperator { inner: Operator::Pw1d(pw_polar(&pw, self::kind(kind)?).map_err(err)?) })
    }

    #[pyo3(signature = (x, kind = "rho"))]
    fn fiber<'py>(&self, py: Python<'py>, x: &Bound<'_, PyAny>, kind: &str) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &polar_fiber_1d(&self.inner, &rational(x)?, self::kind(kind)?).map_err(err)?)
    }

    fn is_polar_zero(&self, x: &Bound<'_, PyAny>) -> PyResult<bool> {
        operator_zero_polar_member(&self.inner, &vector(x)?).map_err(err)
    }

    fn zeros<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        match &self.inner {
            Operator::Finite(t) if t.dim() > 1 => to_py(py, &serde_json::json!({ "zeros": t.zeros() })),
            other => {
                let t = other.to_pw().map_err(err)?;
                to_py(py, &serde_json::json!({ "zeros": t.zeros(), "polar_zeros": pw_zero_polar_set(&t) }))
            }
        }
    }

    /// Exact on the line; other operators need a finite universe document.
    #[pyo3(signature = (universe = None))]
    fn dmax<'py>(&self, py: Python<'py>, universe: Option<&str>) -> PyResult<Bound<'py, PyAny>> {
        match (&self.inner, universe) {
            (Operator::Finite(t), Some(u)) => {
                let u = parse_json::<UniverseDoc>(u).and_then(|d| d.build()).map_err(err)?;
                to_py(py, &is_d_maximal(t, &u).map_err(err)?)
            }
            (op, None) if op.dim() == 1 => to_py(py, &pw_is_d_maximal(&op.to_pw().map_err(err)?).map_err(err)?),
            (Operator::Pw1d(_), Some(_)) => {
                Err(PyValueError::new_err("piecewise operators are decided exactly; omit universe"))
            }
            _ => Err(PyValueError::new_err("dimension 2 and up needs a universe")),
        }
    }

    #[pyo3(signature = (universe, order = None))]
    fn extend<'py>(&self, py: Python<'py>, universe: &str, order: Option<Vec<usize>>) -> PyResult<Bound<'py, PyAny>> {
        let Operator::Finite(t) = &self.inner else {
            return Err(PyValueError::new_err("extend needs a finite operator"));
        };
        let u = parse_json::<UniverseDoc>(universe).and_then(|d| d.build()).map_err(err)?;
        let order = order.unwrap_or_else(|| u.lex_order());
        to_py(py, &greedy_maximal_extension(t, &u, &order).map_err(err)?)
    }

    /// Stampacchia ("S") or Minty ("M") problem on the constraint set `k` (JSON).
    #[pyo3(signature = (k, which = "S", polar = None))]
    fn vip<'py>(&self, py: Python<'py>, k: &str, which: &str, polar: Option<&str>) -> PyResult<Bound<'py, PyAny>> {
        let k: ConstraintSet = parse_json(k).map_err(err)?;
        let w = self::which(which)?;
        let result = match (polar.map(self::kind).transpose()?, &k) {
            (None, _) => vip::solve(&self.inner, &k, w),
            (Some(kind), ConstraintSet::Finite(points)) => polar_vip(&self.inner, points, kind, w),
            (Some(kind), ConstraintSet::Interval(_)) => {
                self.inner.to_pw().and_then(|t| pw_polar(&t, kind)).and_then(|p| vip::solve(&Operator::Pw1d(p), &k, w))
            }
        };
        to_py(py, &result.map_err(err)?)
    }

    #[pyo3(signature = (max_dom = JOHN_DEFAULT_MAX_DOM))]
    fn john<'py>(&self, py: Python<'py>, max_dom: usize) -> PyResult<Bound<'py, PyAny>> {
        let Operator::Finite(t) = &self.inner else {
            return Err(PyValueError::new_err("john needs a finite operator"));
        };
        to_py(py, &john_equivalence(t, max_dom).map_err(err)?)
    }
}

/// Run the verification suite and return the report.
#[pyfunction]
#[pyo3(signature = (seed = None, trials = None, only = None))]
fn verify<'py>(
    py: Python<'py>,
    seed: Option<u64>,
    trials: Option<usize>,
    only: Option<Vec<String>>,
) -> PyResult<Bound<'py, PyAny>> {
    let only = only.unwrap_or_default();
    let rep = py.detach(|| harness::run_all(seed.unwrap_or(DEFAULT_SEED), trials, &only)).map_err(err)?;
    to_py(py, &rep)
}

#[pyfunction]
fn checks() -> Vec<&'static str> {
    harness::registry().iter().map(|c| c.name).collect()
}

#[pymodule]
#[pyo3(name = "polarlab")]
fn init(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyOperator>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(checks, m)?)?;
    m.add("DEFAULT_SEED", DEFAULT_SEED)?;
    Ok(())
}
