//! JSON formats for algebras, modules and report certificates, plus offline
//! re-verification of the witnesses a report carries.
//!
//! Rationals are strings `"n"` or `"n/d"`; matrices are lists of rows.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::Algebra;
use crate::bocs::{AxiomReport, Coring};
use crate::corpus;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::module::{Bimodule, Module, ModuleHom, TensorSpace};
use crate::rational::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    pub dim: usize,
    pub labels: Vec<String>,
    pub structconsts: Vec<(usize, usize, usize, Rat)>,
    pub unit: Vec<Rat>,
    pub idempotents: Vec<Vec<Rat>>,
}

impl AlgebraJson {
    pub fn from_algebra(a: &Algebra) -> AlgebraJson {
        AlgebraJson {
            dim: a.dim(),
            labels: a.labels().to_vec(),
            structconsts: a.triples(),
            unit: a.unit().to_vec(),
            idempotents: a.idempotents().to_vec(),
        }
    }

    /// Builds the algebra; shape errors are parse errors, axioms are not checked.
    pub fn to_algebra(&self) -> Result<Algebra> {
        if self.labels.len() != self.dim {
            return Err(Error::Parse(format!("{} labels for dimension {}", self.labels.len(), self.dim)));
        }
        Algebra::from_triples(self.labels.clone(), &self.structconsts, self.unit.clone(), self.idempotents.clone())
            .map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Either a corpus name or an inline algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Named(String),
    Inline(AlgebraJson),
}

impl AlgebraRef {
    pub fn resolve(&self) -> Result<Algebra> {
        match self {
            AlgebraRef::Named(name) => corpus::parse(name),
            AlgebraRef::Inline(j) => j.to_algebra(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub algebra: AlgebraRef,
    pub dim: usize,
    /// One `dim x dim` matrix per algebra basis element.
    pub action: Vec<Vec<Vec<Rat>>>,
}

impl ModuleJson {
    pub fn from_module(m: &Module, algebra: AlgebraRef) -> ModuleJson {
        ModuleJson { algebra, dim: m.dim(), action: m.actions().iter().map(Mat::to_rows).collect() }
    }

    pub fn to_module(&self) -> Result<Module> {
        let a = self.algebra.resolve()?;
        let action = self.action.iter().map(|rows| matrix(rows, self.dim, self.dim)).collect::<Result<Vec<_>>>()?;
        Module::checked(&a, action)
    }
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
}

/// A dense matrix with the expected shape.
pub fn matrix(rows: &[Vec<Rat>], nrows: usize, ncols: usize) -> Result<Mat> {
    if rows.len() != nrows || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Parse(format!("expected a {nrows}x{ncols} matrix")));
    }
    Ok(Mat::from_rows(rows, ncols))
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    serde_json::from_str::<AlgebraJson>(text).map_err(parse_error)?.to_algebra()
}

pub fn algebra_to_string(a: &Algebra) -> String {
    serde_json::to_string_pretty(&AlgebraJson::from_algebra(a)).expect("algebra serializes")
}

pub fn parse_module(text: &str) -> Result<Module> {
    serde_json::from_str::<ModuleJson>(text).map_err(parse_error)?.to_module()
}

pub fn parse_value(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(parse_error)
}

fn field<'a, T: Deserialize<'a>>(v: &'a Value, key: &str) -> Result<T> {
    let x = v.get(key).ok_or_else(|| Error::Parse(format!("missing field {key:?}")))?;
    T::deserialize(x).map_err(|e| Error::Parse(format!("field {key:?}: {e}")))
}

/// Outcome of re-checking one embedded witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub name: String,
    pub valid: bool,
}

/// Re-verifies every witness embedded in a `gendo` or `bocs` report against
/// the algebra embedded in the same report.
pub fn verify_report(report: &Value) -> Result<Vec<WitnessCheck>> {
    let a = field::<AlgebraJson>(report, "algebra")?.to_algebra()?;
    let mut checks = Vec::new();
    if let Some(g) = report.get("gendo") {
        checks.extend(verify_gendo(&a, g)?);
    }
    if let Some(c) = report.get("coring").filter(|c| !c.is_null()) {
        let axioms = verify_coring(&a, c)?;
        checks.push(WitnessCheck { name: "coring".into(), valid: axioms.passed() });
    }
    Ok(checks)
}

fn verify_gendo(a: &Algebra, g: &Value) -> Result<Vec<WitnessCheck>> {
    let mut checks = Vec::new();
    let w = g.get("witnesses").ok_or_else(|| Error::Parse("missing witnesses".into()))?;
    let mat_of = |key: &str, r: usize, c: usize| -> Result<Option<Mat>> {
        match w.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(x) => {
                let rows: Vec<Vec<Rat>> = Vec::deserialize(x).map_err(|e| Error::Parse(e.to_string()))?;
                matrix(&rows, r, c).map(Some)
            }
        }
    };
    if let Some(idx) = g.get("minimal_faithful").filter(|x| !x.is_null()) {
        let e: Vec<Rat> = field(idx, "element")?;
        let corner = a.corner(&e)?;
        let (ae, _) = Bimodule::left_ideal(a, &corner);
        let (ea, _) = Bimodule::right_ideal(a, &corner);
        let dae = ae.dual();
        if let Some(m) = mat_of("morita", dae.dim(), ea.dim())? {
            let valid = m.is_invertible() && ModuleHom::new(&dae.right_module(), &ea.right_module(), m).is_ok();
            checks.push(WitnessCheck { name: "morita".into(), valid });
        }
        if let Some(m) = mat_of("corner_bimodule", dae.dim(), ea.dim())? {
            let valid = m.is_invertible() && dae.is_hom_to(&ea, &m);
            checks.push(WitnessCheck { name: "corner_bimodule".into(), valid });
        }
    }
    let d = Bimodule::dual_regular(a);
    let t = TensorSpace::new(&d, &d)?;
    if let Some(m) = mat_of("tensor_bimodule", t.dim(), d.dim())? {
        let valid = m.is_invertible() && t.bimodule().is_hom_to(&d, &m);
        checks.push(WitnessCheck { name: "tensor_bimodule".into(), valid });
    }
    Ok(checks)
}

/// Rebuilds the coring on `D(A)` from its certificate and rechecks the axioms.
pub fn verify_coring(a: &Algebra, c: &Value) -> Result<AxiomReport> {
    let n = a.dim();
    let mats = |key: &str| -> Result<Vec<Mat>> {
        let raw: Vec<Vec<Vec<Rat>>> = field(c, key)?;
        if raw.len() != n {
            return Err(Error::Parse(format!("{key} needs one matrix per basis element")));
        }
        raw.iter().map(|r| matrix(r, n, n)).collect()
    };
    let w = Bimodule::new(a, a, mats("w_left")?, mats("w_right")?)?;
    w.check_axioms()?;
    if w != Bimodule::dual_regular(a) {
        return Err(Error::Internal("certificate bimodule is not D(A)".into()));
    }
    let ww = TensorSpace::new(&w, &w)?;
    let basis: Vec<usize> = field(c, "tensor_basis")?;
    if basis != ww.basis_indices() {
        return Err(Error::Internal("certificate tensor basis differs from the recomputed one".into()));
    }
    let mu = matrix(&field::<Vec<Vec<Rat>>>(c, "mu")?, n, ww.dim())?;
    let eps = matrix(&field::<Vec<Vec<Rat>>>(c, "eps")?, n, n)?;
    Ok(Coring::new(&w, mu, eps)?.verify())
}
