//! Finite-dimensional unital associative algebras given by structure constants.

mod builtin;
mod dual;
mod morphism;

use std::sync::Arc;

pub use builtin::from_name;
pub use dual::DualBasis;
pub use morphism::AlgebraMorphism;

use crate::error::{Error, Result};
use crate::exactla::{unit_vector, Field, Matrix, Scalar, Vector};
use crate::report::{Check, Report, Witness};

/// `eᵢ·eⱼ = Σₖ c[i][j][k] eₖ`, with a distinguished unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    field: Field,
    dim: usize,
    unit: Vector,
    /// Flat `(i·dim + j)·dim + k`.
    sc: Vec<Scalar>,
}

impl Algebra {
    /// Validates associativity and the unit on all basis elements.
    pub fn new(field: Field, dim: usize, unit: Vector, sc: Vec<Scalar>) -> Result<Algebra> {
        let a = Algebra::new_unchecked(field, dim, unit, sc)?;
        let report = a.verify();
        if !report.all_passed() {
            return Err(Error::verification(report));
        }
        Ok(a)
    }

    /// Shape checks only; for bulk generation and for deliberately broken inputs.
    pub fn new_unchecked(field: Field, dim: usize, unit: Vector, sc: Vec<Scalar>) -> Result<Algebra> {
        if dim == 0 {
            return Err(Error::Invalid("algebra dimension must be at least 1".into()));
        }
        if unit.len() != dim {
            return Err(Error::dimension("algebra unit", dim, unit.len()));
        }
        if sc.len() != dim * dim * dim {
            return Err(Error::dimension("structure constants", dim * dim * dim, sc.len()));
        }
        if let Some(s) = unit.iter().chain(&sc).find(|s| s.field() != field) {
            return Err(Error::FieldMismatch(field, s.field()));
        }
        Ok(Algebra { field, dim, unit, sc })
    }

    /// Builds from a multiplication table on basis indices: `table(i, j)` is
    /// the coordinate vector of `eᵢeⱼ`.
    pub fn from_table(field: Field, dim: usize, unit: Vector, table: impl Fn(usize, usize) -> Vector) -> Result<Algebra> {
        let mut sc = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = table(i, j);
                if p.len() != dim {
                    return Err(Error::dimension("multiplication table entry", dim, p.len()));
                }
                sc.extend(p);
            }
        }
        Algebra::new(field, dim, unit, sc)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn sc(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.sc[(i * self.dim + j) * self.dim + k]
    }

    pub fn structure_constants(&self) -> &[Scalar] {
        &self.sc
    }

    /// Copy with one structure constant replaced, skipping validation.
    pub fn with_structure_constant(&self, i: usize, j: usize, k: usize, v: Scalar) -> Algebra {
        let mut a = self.clone();
        a.sc[(i * self.dim + j) * self.dim + k] = v;
        a
    }

    pub fn basis(&self, i: usize) -> Vector {
        unit_vector(self.field, self.dim, i)
    }

    pub fn zero_vector(&self) -> Vector {
        vec![self.field.zero(); self.dim]
    }

    /// Coordinates of `eᵢeⱼ`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[Scalar] {
        let start = (i * self.dim + j) * self.dim;
        &self.sc[start..start + self.dim]
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = self.zero_vector();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k].add_product(&ab, c);
                    }
                }
            }
        }
        out
    }

    /// `x ↦ a·x`.
    pub fn left_mul_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(a, &self.basis(j))).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// `x ↦ x·a`.
    pub fn right_mul_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.mul(&self.basis(j), a)).collect();
        Matrix::from_columns(self.field, self.dim, &cols)
    }

    /// Multiplication `A ⊗ A → A` as a `dim × dim²` matrix.
    pub fn mult_map(&self) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(self.field, n, n * n, |k, ij| self.sc[ij * n + k].clone())
    }

    /// The unit as a `dim × 1` matrix, i.e. the map `k → A`.
    pub fn unit_map(&self) -> Matrix {
        Matrix::from_column(self.field, &self.unit)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    /// The algebra map `F: A ⊗ Aᵒᵖ → End_k(A)`, `F(a⊗b)(x) = axb`.
    pub fn regular_f(&self, a: &[Scalar], b: &[Scalar]) -> Matrix {
        self.left_mul_matrix(a)
            .mul(&self.right_mul_matrix(b))
            .expect("shapes agree")
    }

    /// Opposite algebra: `c^op[i][j] = c[j][i]`.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let mut sc = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                sc.extend_from_slice(self.basis_product(j, i));
            }
        }
        Algebra {
            field: self.field,
            dim: n,
            unit: self.unit.clone(),
            sc,
        }
    }

    /// `A ⊗ B` with basis `eᵢ ⊗ fⱼ` at `i·dim B + j`.
    pub fn tensor(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        let (n, m) = (self.dim, other.dim);
        let d = n * m;
        let mut sc = vec![self.field.zero(); d * d * d];
        for i in 0..n {
            for j in 0..m {
                for i2 in 0..n {
                    for j2 in 0..m {
                        let row = ((i * m + j) * d + (i2 * m + j2)) * d;
                        for (k, a) in self.basis_product(i, i2).iter().enumerate() {
                            if a.is_zero() {
                                continue;
                            }
                            for (l, b) in other.basis_product(j, j2).iter().enumerate() {
                                if !b.is_zero() {
                                    sc[row + k * m + l] = a * b;
                                }
                            }
                        }
                    }
                }
            }
        }
        let unit = Matrix::from_column(self.field, &self.unit)
            .kron(&Matrix::from_column(other.field, &other.unit))?
            .column(0);
        Ok(Algebra {
            field: self.field,
            dim: d,
            unit,
            sc,
        })
    }

    /// `Aᵉ = A ⊗ Aᵒᵖ`.
    pub fn enveloping(&self) -> Algebra {
        self.tensor(&self.opposite()).expect("same field")
    }

    /// Associativity on all basis triples and the two unit laws on all basis elements.
    pub fn verify(&self) -> Report {
        let n = self.dim;
        let mut report = Report::new("algebra");
        let mut assoc = Check::pass("associativity");
        'outer: for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for l in 0..n {
                    let lhs = self.mul(&ij, &self.basis(l));
                    let rhs = self.mul(&self.basis(i), self.basis_product(j, l));
                    if lhs != rhs {
                        assoc = Check::fail(
                            "associativity",
                            Some(Witness {
                                indices: vec![i, j, l],
                                location: "(e_i e_j) e_l vs e_i (e_j e_l)".into(),
                                lhs,
                                rhs,
                            }),
                            None,
                        );
                        break 'outer;
                    }
                }
            }
        }
        report.push(assoc);
        for (name, left) in [("left unit", true), ("right unit", false)] {
            let mut check = Check::pass(name);
            for i in 0..n {
                let e = self.basis(i);
                let p = if left { self.mul(&self.unit, &e) } else { self.mul(&e, &self.unit) };
                if p != e {
                    check = Check::fail(
                        name,
                        Some(Witness {
                            indices: vec![i],
                            location: if left { "1 e_i vs e_i" } else { "e_i 1 vs e_i" }.into(),
                            lhs: p,
                            rhs: e,
                        }),
                        None,
                    );
                    break;
                }
            }
            report.push(check);
        }
        report
    }

    /// Shared handle.
    pub fn shared(self) -> Arc<Algebra> {
        Arc::new(self)
    }
}

/// `kⁿ` with `eᵢeⱼ = δᵢⱼeᵢ` and unit `Σ eᵢ`.
pub fn kn(n: usize, field: Field) -> Algebra {
    builtin::diagonal(n, field)
}

/// `M_n(k)` with basis `e_{ij}` at flat index `i·n + j`.
pub fn matrix_algebra(n: usize, field: Field) -> Algebra {
    builtin::matrix_units(n, field)
}

/// Upper-triangular `n × n` matrices, basis `e_{ij}` (`i ≤ j`) in row-major order.
pub fn upper_triangular(n: usize, field: Field) -> Algebra {
    builtin::upper(n, field)
}
