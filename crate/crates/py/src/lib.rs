//! Python bindings. Results come back as plain dicts and lists with the
//! same layout as the command-line JSON; field elements are strings.
//!
//! A result that contradicts one of the checked statements raises
//! `Counterexample`, whose second argument is the full result.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use serde_json::Value;

use prelie_core::algebra::builders::Family;
use prelie_core::algebra::identities::Identity;
use prelie_core::api::{self, AlgebraJson, Outcome};
use prelie_core::field::FieldDescriptor;
use prelie_core::finite::SearchConfig;
use prelie_core::verify::{self, Suite, VerifyConfig};

create_exception!(prelie, Counterexample, PyException);

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (v.to_string(),))
}

fn from_py(obj: &Bound<'_, PyAny>) -> PyResult<Value> {
    let text: String = match obj.extract::<String>() {
        Ok(s) => s,
        Err(_) => obj.py().import("json")?.call_method1("dumps", (obj,))?.extract()?,
    };
    serde_json::from_str(&text).map_err(value_err)
}

fn finish<'py>(py: Python<'py>, outcome: prelie_core::Result<Outcome>) -> PyResult<Bound<'py, PyAny>> {
    let outcome = outcome.map_err(value_err)?;
    let value = to_py(py, &outcome.value)?;
    if outcome.falsified {
        return Err(Counterexample::new_err(("counterexample found", value.unbind())));
    }
    Ok(value)
}

fn parse_field(field: &str) -> PyResult<FieldDescriptor> {
    field.parse().map_err(value_err)
}

/// An algebra given by structure constants over an exact field.
#[pyclass(module = "prelie", frozen)]
struct Algebra {
    spec: AlgebraJson,
}

#[pymethods]
impl Algebra {
    /// A member of one of the built-in families (`in`, `ex1`, `un`, `iinf`).
    #[staticmethod]
    #[pyo3(signature = (n, family = "in", field = "q", a = None))]
    fn build(n: usize, family: &str, field: &str, a: Option<Vec<String>>) -> PyResult<Self> {
        let family: Family = family.parse().map_err(value_err)?;
        let out = api::build(&parse_field(field)?, family, n, a.as_deref()).map_err(value_err)?;
        Ok(Algebra {
            spec: serde_json::from_value(out.value).map_err(value_err)?,
        })
    }

    /// From a JSON string or an equivalent dict.
    #[staticmethod]
    fn from_json(obj: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Algebra {
            spec: serde_json::from_value(from_py(obj)?).map_err(value_err)?,
        })
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.spec).map_err(value_err)
    }

    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &serde_json::to_value(&self.spec).map_err(value_err)?)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.spec.dim
    }

    #[getter]
    fn field(&self) -> String {
        self.spec.field.to_string()
    }

    fn check_identity<'py>(&self, py: Python<'py>, identity: &str) -> PyResult<Bound<'py, PyAny>> {
        let kind: Identity = identity.parse().map_err(value_err)?;
        finish(py, api::check_identity_json(&self.spec, kind))
    }

    #[pyo3(signature = (cap = None, workers = None))]
    fn simplicity<'py>(&self, py: Python<'py>, cap: Option<u64>, workers: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
        let out = py.detach(|| api::simplicity(&self.spec, cap, workers));
        finish(py, out)
    }

    fn derivations<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        finish(py, api::derivations(&self.spec))
    }

    /// Checks `candidate` (a matrix, column j the image of e_j) if given,
    /// otherwise lists every automorphism over a finite field.
    #[pyo3(signature = (candidate = None, cap = None, workers = None))]
    fn automorphisms<'py>(
        &self,
        py: Python<'py>,
        candidate: Option<&Bound<'py, PyAny>>,
        cap: Option<u64>,
        workers: Option<usize>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let candidate = candidate.map(from_py).transpose()?;
        let enumerate = candidate.is_none();
        let out = py.detach(|| api::automorphisms(&self.spec, candidate.as_ref(), enumerate, cap, workers));
        finish(py, out)
    }

    /// Tests the Rota-Baxter axiom for `operator` (a matrix, or a dict with
    /// `matrix` and `weight`).
    #[pyo3(signature = (operator, weight = None))]
    fn rb_verify<'py>(&self, py: Python<'py>, operator: &Bound<'py, PyAny>, weight: Option<String>) -> PyResult<Bound<'py, PyAny>> {
        finish(py, api::rb_verify(&self.spec, &from_py(operator)?, weight.as_deref()))
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim={}, field={})", self.spec.dim, self.spec.field)
    }
}

/// All Rota-Baxter operators on I_n over a finite field, for one weight or `all`.
#[pyfunction]
#[pyo3(signature = (field, n, weight = "all", cap = None, workers = None))]
fn rb_enumerate<'py>(
    py: Python<'py>,
    field: &str,
    n: usize,
    weight: &str,
    cap: Option<u64>,
    workers: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let field = parse_field(field)?;
    let out = py.detach(|| api::rb_enumerate(&field, n, weight, cap, workers));
    finish(py, out)
}

#[pyfunction]
#[pyo3(signature = (field, n, weight = "all", cap = None, workers = None))]
fn rb_index<'py>(
    py: Python<'py>,
    field: &str,
    n: usize,
    weight: &str,
    cap: Option<u64>,
    workers: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let field = parse_field(field)?;
    let out = py.detach(|| api::rb_index(&field, n, weight, cap, workers));
    finish(py, out)
}

/// Decompositions of I_n into two subalgebras, or the one attached to
/// `operator`.
#[pyfunction]
#[pyo3(signature = (field, n, operator = None, weight = None, cap = None, workers = None))]
fn decompose<'py>(
    py: Python<'py>,
    field: &str,
    n: usize,
    operator: Option<&Bound<'py, PyAny>>,
    weight: Option<String>,
    cap: Option<u64>,
    workers: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let field = parse_field(field)?;
    let op = operator.map(from_py).transpose()?;
    let out = py.detach(|| api::decompose(&field, n, op.as_ref(), weight.as_deref(), cap, workers));
    finish(py, out)
}

/// Runs a verification suite and returns its report.
#[pyfunction]
#[pyo3(signature = (suite = "all", seed = 0, max_n = 6, fields = None, workers = None))]
fn verify_theorems<'py>(
    py: Python<'py>,
    suite: &str,
    seed: u64,
    max_n: usize,
    fields: Option<Vec<String>>,
    workers: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let suite: Suite = suite.parse().map_err(value_err)?;
    let mut config = VerifyConfig {
        seed,
        max_n,
        search: SearchConfig {
            workers,
            ..SearchConfig::default()
        },
        ..VerifyConfig::default()
    };
    if let Some(fields) = fields {
        config.fields = fields.iter().map(|f| parse_field(f)).collect::<PyResult<_>>()?;
    }
    let out = py.detach(|| {
        verify::verify(suite, &config).and_then(|report| {
            Ok(Outcome {
                falsified: !report.passed(),
                value: serde_json::to_value(&report)?,
            })
        })
    });
    finish(py, out)
}

#[pymodule]
#[pyo3(name = "prelie")]
fn prelie_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_function(wrap_pyfunction!(rb_enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(rb_index, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorems, m)?)?;
    m.add("Counterexample", m.py().get_type::<Counterexample>())?;
    Ok(())
}
