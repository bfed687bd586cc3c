//! JSON interchange formats.
//!
//! Scalars are written as strings (`"3"`, `"-1/2"`, `"4 mod 5"`); on input,
//! JSON integers are accepted too. Matrices are arrays of rows.

use std::path::Path;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{self, Algebra};
use crate::error::{Error, Result};
use crate::exactla::{coerce, Field, Matrix, Scalar};
use crate::modules::{Bimodule, Coaction, DescentDatum};
use crate::ybe::{Provenance, YangBaxterOperator};

/// `"Q"` or `{"Fp": p}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Name(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl FieldSpec {
    pub fn resolve(&self) -> Result<Field> {
        match self {
            FieldSpec::Name(s) => Field::parse(s),
            FieldSpec::Prime { fp } => Field::prime(*fp),
        }
    }
}

impl From<Field> for FieldSpec {
    fn from(f: Field) -> FieldSpec {
        match f {
            Field::Rational => FieldSpec::Name("Q".into()),
            Field::Prime(p) => FieldSpec::Prime { fp: p },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarIn {
    Int(i64),
    Text(String),
}

impl ScalarIn {
    pub fn to_scalar(&self, field: Field) -> Result<Scalar> {
        match self {
            ScalarIn::Int(v) => Ok(field.from_i64(*v)),
            ScalarIn::Text(s) => coerce(&s.parse()?, field),
        }
    }
}

impl From<&Scalar> for ScalarIn {
    fn from(s: &Scalar) -> ScalarIn {
        ScalarIn::Text(s.to_string())
    }
}

pub type MatrixIn = Vec<Vec<ScalarIn>>;

pub fn matrix_in(field: Field, rows: &MatrixIn) -> Result<Matrix> {
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|s| s.to_scalar(field)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, rows)
}

fn matrix_in_shaped(field: Field, rows: &MatrixIn, shape: (usize, usize), what: &str) -> Result<Matrix> {
    // an empty row list cannot carry its column count
    if rows.is_empty() && shape.0 == 0 {
        return Ok(Matrix::zeros(field, 0, shape.1));
    }
    let m = matrix_in(field, rows)?;
    if m.shape() != shape {
        return Err(Error::dimension(what, format!("{}x{}", shape.0, shape.1), format!("{}x{}", m.rows(), m.cols())));
    }
    Ok(m)
}

pub fn matrix_out(m: &Matrix) -> MatrixIn {
    (0..m.rows()).map(|i| m.row(i).iter().map(ScalarIn::from).collect()).collect()
}

/// `{"field", "dim", "unit", "sc"}` with `sc[i][j][k]` the coefficient of `e_k` in `e_i e_j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldSpec,
    pub dim: usize,
    pub unit: Vec<ScalarIn>,
    pub sc: Vec<Vec<Vec<ScalarIn>>>,
}

impl AlgebraFile {
    pub fn from_algebra(a: &Algebra) -> AlgebraFile {
        let n = a.dim();
        AlgebraFile {
            field: a.field().into(),
            dim: n,
            unit: a.unit().iter().map(ScalarIn::from).collect(),
            sc: (0..n)
                .map(|i| (0..n).map(|j| (0..n).map(|k| ScalarIn::from(a.sc(i, j, k))).collect()).collect())
                .collect(),
        }
    }

    /// Builds the algebra; `field` overrides the file's field.
    pub fn to_algebra(&self, field: Option<Field>, validate: bool) -> Result<Algebra> {
        let field = match field {
            Some(f) => f,
            None => self.field.resolve()?,
        };
        let n = self.dim;
        if self.unit.len() != n {
            return Err(Error::dimension("algebra unit", n, self.unit.len()));
        }
        if self.sc.len() != n || self.sc.iter().any(|r| r.len() != n || r.iter().any(|c| c.len() != n)) {
            return Err(Error::dimension("structure constants", format!("{n}x{n}x{n}"), "ragged array"));
        }
        let unit = self.unit.iter().map(|s| s.to_scalar(field)).collect::<Result<Vec<_>>>()?;
        let sc = self
            .sc
            .iter()
            .flatten()
            .flatten()
            .map(|s| s.to_scalar(field))
            .collect::<Result<Vec<_>>>()?;
        if validate {
            Algebra::new(field, n, unit, sc)
        } else {
            Algebra::new_unchecked(field, n, unit, sc)
        }
    }
}

/// A builtin name (`kn:3`, `mat:2`, `upper:2`) or an inline algebra.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Name(String),
    Inline(AlgebraFile),
}

impl AlgebraRef {
    pub fn resolve(&self, field: Option<Field>) -> Result<Algebra> {
        match self {
            AlgebraRef::Name(name) => algebra::from_name(name, field.unwrap_or(Field::Rational)),
            AlgebraRef::Inline(file) => file.to_algebra(field, true),
        }
    }
}

/// `{"algebra", "dim", "rho", "left"?, "right"}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComoduleFile {
    pub algebra: AlgebraRef,
    pub dim: usize,
    pub rho: MatrixIn,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<Vec<MatrixIn>>,
    pub right: Vec<MatrixIn>,
}

fn actions(field: Field, mats: &[MatrixIn], dim: usize, what: &str) -> Result<Vec<Matrix>> {
    mats.iter().map(|m| matrix_in_shaped(field, m, (dim, dim), what)).collect()
}

impl ComoduleFile {
    pub fn from_coaction(c: &Coaction, algebra: AlgebraRef) -> ComoduleFile {
        ComoduleFile {
            algebra,
            dim: c.dim(),
            rho: matrix_out(c.rho()),
            left: c.left().map(|l| l.iter().map(matrix_out).collect()),
            right: c.right().iter().map(matrix_out).collect(),
        }
    }

    pub fn to_coaction(&self, field: Option<Field>) -> Result<Coaction> {
        let a = Arc::new(self.algebra.resolve(field)?);
        let f = a.field();
        let rho = matrix_in_shaped(f, &self.rho, (self.dim * a.dim(), self.dim), "rho")?;
        let right = actions(f, &self.right, self.dim, "right action")?;
        let c = Coaction::new(a, right, rho)?;
        match &self.left {
            None => Ok(c),
            Some(l) => c.with_left(actions(f, l, self.dim, "left action")?),
        }
    }
}

/// `{"algebra", "dim", "g", "left", "right"}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DescentFile {
    pub algebra: AlgebraRef,
    pub dim: usize,
    pub g: MatrixIn,
    pub left: Vec<MatrixIn>,
    pub right: Vec<MatrixIn>,
}

impl DescentFile {
    pub fn from_datum(d: &DescentDatum, algebra: AlgebraRef) -> DescentFile {
        DescentFile {
            algebra,
            dim: d.module().dim(),
            g: matrix_out(d.g()),
            left: d.module().left().iter().map(matrix_out).collect(),
            right: d.module().right().iter().map(matrix_out).collect(),
        }
    }

    /// The bimodule axioms are not enforced here; `verify_descent` reports them.
    pub fn to_datum(&self, field: Option<Field>) -> Result<DescentDatum> {
        let a = Arc::new(self.algebra.resolve(field)?);
        let f = a.field();
        let mn = self.dim * a.dim();
        let left = actions(f, &self.left, self.dim, "left action")?;
        let right = actions(f, &self.right, self.dim, "right action")?;
        let module = Bimodule::new_unchecked(a, self.dim, left, right)?;
        DescentDatum::new(module, matrix_in_shaped(f, &self.g, (mn, mn), "g")?)
    }
}

/// `{"dim", "omega", "provenance", "qybe", "cube"}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OperatorFile {
    pub dim: usize,
    pub omega: Matrix,
    pub provenance: Provenance,
    pub qybe: bool,
    pub cube: bool,
}

impl OperatorFile {
    pub fn new(op: &YangBaxterOperator, qybe: bool, cube: bool) -> OperatorFile {
        OperatorFile {
            dim: op.space_dim(),
            omega: op.omega().clone(),
            provenance: op.provenance(),
            qybe,
            cube,
        }
    }

    /// The stored matrix as an operator; `field` re-homes rational entries.
    pub fn to_operator(&self, field: Option<Field>) -> Result<YangBaxterOperator> {
        let omega = match field {
            Some(f) => self.omega.coerce(f)?,
            None => self.omega.clone(),
        };
        YangBaxterOperator::new(self.dim, omega, self.provenance)
    }
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    from_json(&text)
}
