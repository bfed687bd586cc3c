use std::sync::Arc;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};
use crate::report::{Check, Report};

/// A finite-dimensional `A`-bimodule: `left[i]` is `v ↦ eᵢ·v`, `right[i]` is `v ↦ v·eᵢ`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bimodule {
    algebra: Arc<Algebra>,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(algebra: Arc<Algebra>, dim: usize, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Bimodule> {
        let b = Bimodule::new_unchecked(algebra, dim, left, right)?;
        let report = b.verify();
        if !report.all_passed() {
            return Err(Error::verification(report));
        }
        Ok(b)
    }

    pub fn new_unchecked(algebra: Arc<Algebra>, dim: usize, left: Vec<Matrix>, right: Vec<Matrix>) -> Result<Bimodule> {
        check_action_shapes(&algebra, dim, &left, "left action")?;
        check_action_shapes(&algebra, dim, &right, "right action")?;
        Ok(Bimodule { algebra, dim, left, right })
    }

    /// `A` acting on itself by multiplication on both sides.
    pub fn regular(algebra: Arc<Algebra>) -> Bimodule {
        let n = algebra.dim();
        let left = (0..n).map(|i| algebra.left_mul_matrix(&algebra.basis(i))).collect();
        let right = (0..n).map(|i| algebra.right_mul_matrix(&algebra.basis(i))).collect();
        Bimodule { algebra, dim: n, left, right }
    }

    /// The free bimodule `A ⊗ A`: `a·(x⊗y)·b = ax ⊗ yb`.
    pub fn free(algebra: Arc<Algebra>) -> Bimodule {
        let n = algebra.dim();
        let id = Matrix::identity(algebra.field(), n);
        let left = (0..n)
            .map(|i| algebra.left_mul_matrix(&algebra.basis(i)).kron(&id).expect("same field"))
            .collect();
        let right = (0..n)
            .map(|i| id.kron(&algebra.right_mul_matrix(&algebra.basis(i))).expect("same field"))
            .collect();
        Bimodule {
            algebra,
            dim: n * n,
            left,
            right,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right(&self) -> &[Matrix] {
        &self.right
    }

    /// Action of an arbitrary element on the left.
    pub fn left_action(&self, a: &[Scalar]) -> Matrix {
        combine(&self.algebra, self.dim, a, &self.left)
    }

    pub fn right_action(&self, a: &[Scalar]) -> Matrix {
        combine(&self.algebra, self.dim, a, &self.right)
    }

    pub fn verify(&self) -> Report {
        let mut report = Report::new("bimodule");
        report.extend(verify_action(&self.algebra, self.dim, &self.left, Side::Left));
        report.extend(verify_action(&self.algebra, self.dim, &self.right, Side::Right));
        let mut commute = Vec::new();
        for (i, l) in self.left.iter().enumerate() {
            for (j, r) in self.right.iter().enumerate() {
                let lr = l.mul(r).expect("square");
                let rl = r.mul(l).expect("square");
                commute.push(Check::maps_equal_at("actions commute", "(e_i v) e_j vs e_i (v e_j)", &[i, j], &lr, &rl));
            }
        }
        report.push_all("actions commute", commute);
        report
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    Left,
    Right,
}

pub(crate) fn check_action_shapes(algebra: &Algebra, dim: usize, mats: &[Matrix], what: &str) -> Result<()> {
    if mats.len() != algebra.dim() {
        return Err(Error::dimension(format!("{what}: number of matrices"), algebra.dim(), mats.len()));
    }
    for m in mats {
        if m.shape() != (dim, dim) {
            return Err(Error::dimension(what, format!("{dim}x{dim}"), format!("{}x{}", m.rows(), m.cols())));
        }
        if m.field() != algebra.field() {
            return Err(Error::FieldMismatch(algebra.field(), m.field()));
        }
    }
    Ok(())
}

pub(crate) fn combine(algebra: &Algebra, dim: usize, a: &[Scalar], mats: &[Matrix]) -> Matrix {
    Matrix::linear_combination(algebra.field(), dim, dim, a, mats)
}

/// Unit and multiplicativity of a one-sided action given on basis elements.
/// Right actions compose as `(v·a)·b = v·(ab)`, i.e. `R(ab) = R(b) R(a)`.
pub(crate) fn verify_action(algebra: &Algebra, dim: usize, mats: &[Matrix], side: Side) -> Report {
    let label = match side {
        Side::Left => "left action",
        Side::Right => "right action",
    };
    let mut report = Report::new(label);
    let unit = combine(algebra, dim, algebra.unit(), mats);
    let id = Matrix::identity(algebra.field(), dim);
    report.push(Check::maps_equal(format!("{label}: unit acts as identity"), "1 . v vs v", &unit, &id));
    let mut mult = Vec::new();
    let name = format!("{label}: multiplicative");
    for i in 0..algebra.dim() {
        for j in 0..algebra.dim() {
            let prod = combine(algebra, dim, algebra.basis_product(i, j), mats);
            let composed = match side {
                Side::Left => mats[i].mul(&mats[j]),
                Side::Right => mats[j].mul(&mats[i]),
            }
            .expect("square");
            mult.push(Check::maps_equal_at(name.clone(), "action of e_i e_j vs composite", &[i, j], &prod, &composed));
        }
    }
    report.push_all(&name, mult);
    report
}
