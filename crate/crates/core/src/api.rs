//! JSON-level entry points with the field chosen at runtime. The command
//! line and the Python bindings both go through here.
//!
//! Scalars are strings in the field's literal syntax, matrices are
//! row-major lists of rows, and basis indices are 1-based.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::builders::{self, Family};
use crate::algebra::identities::{check_identity, Identity};
use crate::algebra::ideals::is_simple_finite;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::{Field, FieldDescriptor};
use crate::finite::SearchConfig;
use crate::linalg::{forms, Matrix, Subspace};
use crate::rota_baxter::{self as rb, Case, CaseCertificate, Decomposition, RbOperator};
use crate::{symmetry, with_field};

/// A scalar literal; JSON strings and integers are both accepted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Text(String),
    Int(i64),
}

impl Scalar {
    pub fn literal(&self) -> String {
        match self {
            Scalar::Text(s) => s.clone(),
            Scalar::Int(i) => i.to_string(),
        }
    }
}

/// `{"field": ..., "dim": n, "table": [[i, j, k, "c"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldDescriptor,
    pub dim: usize,
    pub table: Vec<(usize, usize, usize, Scalar)>,
}

/// `{"ambient_dim": n, "basis": [[...], ...]}` with rref basis rows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceJson {
    pub ambient_dim: usize,
    pub basis: Vec<Vec<String>>,
}

/// Result of a command: its JSON output, and whether it produced a
/// counterexample to a statement it checks.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub value: Value,
    pub falsified: bool,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Self { value, falsified: false }
    }
}

pub fn algebra_to_json<F: Field>(a: &Algebra<F>) -> AlgebraJson {
    let f = a.field();
    AlgebraJson {
        field: f.descriptor(),
        dim: a.dim(),
        table: a
            .entries()
            .map(|(i, j, k, c)| (i + 1, j + 1, k + 1, Scalar::Text(f.format(c))))
            .collect(),
    }
}

pub fn algebra_from_json<F: Field>(f: &F, spec: &AlgebraJson) -> Result<Algebra<F>> {
    let entries = spec
        .table
        .iter()
        .map(|(i, j, k, c)| Ok((*i, *j, *k, f.parse(&c.literal())?)))
        .collect::<Result<Vec<_>>>()?;
    Algebra::from_table(f.clone(), spec.dim, entries)
}

pub fn matrix_to_json<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Value {
    json!(m.format(f))
}

pub fn subspace_to_json<F: Field>(f: &F, w: &Subspace<F::Elem>) -> SubspaceJson {
    SubspaceJson {
        ambient_dim: w.ambient_dim(),
        basis: w.basis().format(f),
    }
}

pub fn subspace_from_json<F: Field>(f: &F, w: &SubspaceJson) -> Result<Subspace<F::Elem>> {
    let rows = w
        .basis
        .iter()
        .map(|r| {
            if r.len() != w.ambient_dim {
                return Err(Error::DimensionMismatch(format!("basis row of length {}", r.len())));
            }
            crate::linalg::vector::parse(f, r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(f, w.ambient_dim, &rows))
}

fn literals(value: &Value) -> Result<Vec<Vec<String>>> {
    let rows = value
        .as_array()
        .ok_or_else(|| Error::InvalidArgument("a matrix must be a list of rows".into()))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::InvalidArgument("matrix rows must be lists".into()))?
                .iter()
                .map(|x| match x {
                    Value::String(s) => Ok(s.clone()),
                    Value::Number(n) => Ok(n.to_string()),
                    other => Err(Error::InvalidArgument(format!("bad matrix entry {other}"))),
                })
                .collect()
        })
        .collect()
}

/// A matrix given either as a bare list of rows or as `{"matrix": rows,
/// "weight": w}`; returns the rows and the optional weight literal.
pub fn operator_literals(value: &Value) -> Result<(Vec<Vec<String>>, Option<String>)> {
    match value {
        Value::Array(_) => Ok((literals(value)?, None)),
        Value::Object(map) => {
            let m = map
                .get("matrix")
                .or_else(|| map.get("operator"))
                .ok_or_else(|| Error::InvalidArgument("operator object needs a `matrix` field".into()))?;
            let weight = match map.get("weight") {
                None | Some(Value::Null) => None,
                Some(Value::String(s)) => Some(s.clone()),
                Some(Value::Number(n)) => Some(n.to_string()),
                Some(other) => return Err(Error::InvalidArgument(format!("bad weight {other}"))),
            };
            Ok((literals(m)?, weight))
        }
        _ => Err(Error::InvalidArgument("expected a matrix".into())),
    }
}

fn parse_square<F: Field>(f: &F, rows: &[Vec<String>], n: usize) -> Result<Matrix<F::Elem>> {
    let m = Matrix::parse(f, rows)?;
    if m.nrows() != n || m.ncols() != n {
        return Err(Error::DimensionMismatch(format!(
            "expected a {n}x{n} matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(m)
}

fn config(cap: Option<u64>, workers: Option<usize>, default_cap: u64) -> SearchConfig {
    SearchConfig {
        cap: cap.unwrap_or(default_cap),
        workers,
    }
}

/// Builds a family member; `a` is the optional vector for the dot-product
/// family.
pub fn build(field: &FieldDescriptor, family: Family, n: usize, a: Option<&[String]>) -> Result<Outcome> {
    let any = field.build()?;
    with_field!(&any, f => {
        let vec = a.map(|a| crate::linalg::vector::parse(f, a)).transpose()?;
        let alg = builders::build(f, family, n, vec.as_deref())?;
        let mut value = serde_json::to_value(algebra_to_json(&alg))?;
        if family == Family::UpperTriangular {
            let (_, first_row) = builders::upper_triangular_circ(f, n)?;
            value["first_row"] = json!(first_row.iter().map(|i| i + 1).collect::<Vec<_>>());
        }
        Ok(Outcome::ok(value))
    })
}

pub fn check_identity_json(spec: &AlgebraJson, kind: Identity) -> Result<Outcome> {
    let any = spec.field.build_allowing_char2()?;
    with_field!(&any, f => {
        let a = algebra_from_json(f, spec)?;
        let c = check_identity(&a, kind);
        Ok(Outcome::ok(json!({"identity": kind.name(), "holds": c.holds, "witness": c.witness})))
    })
}

/// Simplicity of a family member. GF(2) is accepted for `I_n` only.
pub fn family_simplicity(
    field: &FieldDescriptor,
    family: Family,
    n: usize,
    cap: Option<u64>,
    workers: Option<usize>,
) -> Result<Outcome> {
    let any = if family == Family::In { field.build_allowing_char2()? } else { field.build()? };
    let spec = with_field!(&any, f => algebra_to_json(&builders::build(f, family, n, None)?));
    simplicity(&spec, cap, workers)
}

/// Simplicity over a finite field. GF(2) is accepted here.
pub fn simplicity(spec: &AlgebraJson, cap: Option<u64>, workers: Option<usize>) -> Result<Outcome> {
    let any = spec.field.build_allowing_char2()?;
    let cfg = config(cap, workers, crate::finite::DEFAULT_SIMPLICITY_CAP);
    with_field!(&any, f => {
        let a = algebra_from_json(f, spec)?;
        let s = is_simple_finite(&a, &cfg)?;
        // I_n is simple in every characteristic
        let falsified = !s.simple && rb::require_i_n(&a).is_ok();
        Ok(Outcome {
            value: json!({
                "simple": s.simple,
                "zero_product": s.zero_product,
                "witness": s.witness.map(|w| subspace_to_json(f, &w)),
            }),
            falsified,
        })
    })
}

pub fn derivations(spec: &AlgebraJson) -> Result<Outcome> {
    let any = spec.field.build()?;
    with_field!(&any, f => {
        let a = algebra_from_json(f, spec)?;
        let basis = symmetry::derivation_basis(&a);
        let n = a.dim();
        let expected = (n.saturating_sub(1)) * (n.saturating_sub(2)) / 2;
        let falsified = rb::require_i_n(&a).is_ok() && n > 1 && basis.len() != expected;
        Ok(Outcome {
            value: json!({
                "dim": basis.len(),
                "basis": basis.iter().map(|m| matrix_to_json(f, m)).collect::<Vec<_>>(),
            }),
            falsified,
        })
    })
}

/// Checks a candidate automorphism and/or enumerates all of them.
pub fn automorphisms(
    spec: &AlgebraJson,
    candidate: Option<&Value>,
    enumerate: bool,
    cap: Option<u64>,
    workers: Option<usize>,
) -> Result<Outcome> {
    let any = spec.field.build()?;
    let cfg = config(cap, workers, crate::finite::DEFAULT_CAP);
    with_field!(&any, f => {
        let a = algebra_from_json(f, spec)?;
        let mut value = json!({});
        let mut falsified = false;
        if let Some(c) = candidate {
            let (rows, _) = operator_literals(c)?;
            let m = parse_square(f, &rows, a.dim())?;
            let check = symmetry::is_automorphism(&a, &m)?;
            let mut entry = json!({"is_automorphism": check.holds, "witness": check.witness});
            if let Ok(res) = symmetry::automorphism_residuals(&a, &m) {
                let zero = crate::report::all_zero(f, &res);
                let invertible = crate::linalg::is_invertible(f, &m);
                entry["residuals_zero"] = json!(zero);
                falsified |= (zero && invertible) != check.holds;
            }
            value["candidate"] = entry;
        }
        if enumerate {
            let all = symmetry::enumerate_automorphisms_finite(&a, &cfg)?;
            value["count"] = json!(all.len());
            value["automorphisms"] = json!(all.iter().map(|m| matrix_to_json(f, m)).collect::<Vec<_>>());
        }
        Ok(Outcome { value, falsified })
    })
}

fn certificate_json<F: Field>(f: &F, c: &CaseCertificate<F::Elem>) -> Value {
    let mut v = json!({"holds": c.holds, "detail": c.detail});
    if let Some(s) = &c.s {
        v["s"] = matrix_to_json(f, s);
    }
    if let Some(d) = &c.s_squared_defect {
        v["s_squared_defect"] = matrix_to_json(f, d);
    }
    if let Some(a) = &c.alpha_n {
        v["alpha_n"] = json!(f.format(a));
        v["phi_normalized"] = json!(c.phi_normalized);
    }
    v
}

/// The full report on one operator; generic so callers holding a concrete
/// field can use it directly.
pub fn rb_report<F: Field>(a: &Algebra<F>, r: &RbOperator<F::Elem>) -> Result<Outcome> {
    let f = a.field();
    let check = rb::is_rb(a, r)?;
    let mut value = json!({
        "operator": matrix_to_json(f, &r.matrix),
        "weight": f.format(&r.weight),
        "is_rb": check.holds,
        "witness": check.witness,
        "splitting": r.is_splitting(f),
        "case": Value::Null,
        "certificate": Value::Null,
        "theorem2": Value::Null,
    });
    let mut falsified = false;
    if check.holds && rb::require_i_n(a).is_ok() {
        let cert = rb::classify_case(a, r)?;
        let s = rb::rb_structure_check(a, r)?;
        falsified = !cert.holds || !s.holds();
        value["case"] = json!(cert.case.label());
        value["certificate"] = certificate_json(f, &cert);
        value["theorem2"] = serde_json::to_value(&s)?;
        if cert.case == Case::One && !f.is_zero(&r.weight) && a.dim() % 2 == 1 {
            falsified = true;
        }
    }
    Ok(Outcome { value, falsified })
}

/// `weight` overrides a weight given inside the operator file; the default
/// is 0.
pub fn rb_verify(spec: &AlgebraJson, op: &Value, weight: Option<&str>) -> Result<Outcome> {
    let any = spec.field.build()?;
    with_field!(&any, f => {
        let a = algebra_from_json(f, spec)?;
        let (rows, inner) = operator_literals(op)?;
        let m = parse_square(f, &rows, a.dim())?;
        let w = match weight.map(str::to_string).or(inner) {
            Some(w) => f.parse(&w)?,
            None => f.zero(),
        };
        rb_report(&a, &RbOperator::new(m, w)?)
    })
}

fn weights<F: Field>(f: &F, weight: &str) -> Result<Vec<F::Elem>> {
    if weight == "all" {
        f.elements()
    } else {
        Ok(vec![f.parse(weight)?])
    }
}

/// All RB operators on `I_n` for one weight or for every weight (`"all"`).
pub fn rb_enumerate(
    field: &FieldDescriptor,
    n: usize,
    weight: &str,
    cap: Option<u64>,
    workers: Option<usize>,
) -> Result<Outcome> {
    let any = field.build()?;
    let cfg = config(cap, workers, crate::finite::DEFAULT_CAP);
    with_field!(&any, f => {
        let a = builders::i_n(f, n)?;
        let mut results = Vec::new();
        let mut falsified = false;
        for w in weights(f, weight)? {
            let ops = rb::enumerate_rb_finite(&a, &w, &cfg)?;
            let mut reports = Vec::with_capacity(ops.len());
            for r in &ops {
                let o = rb_report(&a, r)?;
                falsified |= o.falsified;
                reports.push(o.value);
            }
            results.push(json!({
                "weight": f.format(&w),
                "count": ops.len(),
                "nontrivial": ops.iter().filter(|r| !r.is_trivial(f)).count(),
                "operators": reports,
            }));
        }
        Ok(Outcome {
            value: json!({"field": f.descriptor(), "n": n, "results": results}),
            falsified,
        })
    })
}

pub fn rb_index(
    field: &FieldDescriptor,
    n: usize,
    weight: &str,
    cap: Option<u64>,
    workers: Option<usize>,
) -> Result<Outcome> {
    let any = field.build()?;
    let cfg = config(cap, workers, crate::finite::DEFAULT_CAP);
    with_field!(&any, f => {
        let a = builders::i_n(f, n)?;
        let mut results = Vec::new();
        let mut falsified = false;
        for w in weights(f, weight)? {
            let index = rb::rb_index_finite(&a, &w, &cfg)?;
            falsified |= !matches!(index, rb::RbIndex::Finite(m) if m <= 2);
            results.push(json!({"weight": f.format(&w), "index": index}));
        }
        Ok(Outcome {
            value: json!({"field": f.descriptor(), "n": n, "results": results}),
            falsified,
        })
    })
}

fn decomposition_json<F: Field>(a: &Algebra<F>, d: &Decomposition<F::Elem>) -> Result<(Value, bool)> {
    let f = a.field();
    let nf = d.normal_form(a)?;
    let mut shape = serde_json::to_value(&nf.form)?;
    shape["holds"] = json!(nf.holds);
    if let Some(w) = &nf.w {
        shape["w"] = serde_json::to_value(subspace_to_json(f, w))?;
    }
    if let Some(u) = &nf.u {
        shape["u"] = serde_json::to_value(subspace_to_json(f, u))?;
    }
    let value = json!({
        "a1": subspace_to_json(f, &d.a1),
        "a2": subspace_to_json(f, &d.a2),
        "a1_lagrangian": forms::is_lagrangian(f, &d.a1),
        "a2_lagrangian": forms::is_lagrangian(f, &d.a2),
        "normal_form": shape,
    });
    Ok((value, nf.holds))
}

/// Without an operator: every decomposition of `I_n` over a finite field
/// into two subalgebras. With one: `ker R ⊕ ker(R + λE)` and whether the
/// splitting operator of that decomposition gives back `R`.
pub fn decompose(
    field: &FieldDescriptor,
    n: usize,
    op: Option<&Value>,
    weight: Option<&str>,
    cap: Option<u64>,
    workers: Option<usize>,
) -> Result<Outcome> {
    let any = field.build()?;
    let cfg = config(cap, workers, crate::finite::DEFAULT_CAP);
    with_field!(&any, f => {
        let a = builders::i_n(f, n)?;
        match op {
            Some(op) => {
                let (rows, inner) = operator_literals(op)?;
                let m = parse_square(f, &rows, n)?;
                let w = match weight.map(str::to_string).or(inner) {
                    Some(w) => f.parse(&w)?,
                    None => return Err(Error::InvalidArgument("a nonzero weight is required".into())),
                };
                let r = RbOperator::new(m, w.clone())?;
                if !rb::is_rb(&a, &r)?.holds {
                    return Err(Error::NotRotaBaxter("the operator fails the axiom".into()));
                }
                let d = Decomposition::from_operator(&a, &r)?;
                let p = rb::splitting_from_decomposition(&a, &d, &w)?;
                let (mut value, shape_ok) = decomposition_json(&a, &d)?;
                value["reproduces_operator"] = json!(p == r);
                Ok(Outcome { value, falsified: p != r || !shape_ok })
            }
            None => {
                let all = rb::decompositions_finite(&a, &cfg)?;
                let mut items = Vec::with_capacity(all.len());
                let mut falsified = false;
                for d in &all {
                    let (v, ok) = decomposition_json(&a, d)?;
                    falsified |= !ok;
                    items.push(v);
                }
                Ok(Outcome {
                    value: json!({"field": f.descriptor(), "n": n, "count": all.len(), "decompositions": items}),
                    falsified,
                })
            }
        }
    })
}
