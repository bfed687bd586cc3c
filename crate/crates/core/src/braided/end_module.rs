use std::sync::Arc;

use super::tensor::TensorOverA;
use crate::algebra::{Algebra, DualBasis};
use crate::error::{Error, Result};
use crate::exactla::{flip, Matrix};
use crate::modules::Coaction;

/// A left `End_k(A)`-module, given by the action of each matrix unit
/// `E_rs` (at index `r·n + s`).
#[derive(Clone, Debug, PartialEq)]
pub struct EndModule {
    algebra: Arc<Algebra>,
    dim: usize,
    actions: Vec<Matrix>,
}

impl EndModule {
    pub fn new(algebra: Arc<Algebra>, dim: usize, actions: Vec<Matrix>) -> Result<EndModule> {
        let n = algebra.dim();
        if actions.len() != n * n {
            return Err(Error::dimension("End_k(A) actions", n * n, actions.len()));
        }
        if let Some(m) = actions.iter().find(|m| m.shape() != (dim, dim)) {
            return Err(Error::dimension("End_k(A) action", format!("{dim}x{dim}"), format!("{:?}", m.shape())));
        }
        Ok(EndModule { algebra, dim, actions })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    /// Action of an arbitrary `f ∈ End_k(A)`.
    pub fn act(&self, f: &Matrix) -> Matrix {
        Matrix::linear_combination(self.algebra.field(), self.dim, self.dim, f.entries(), &self.actions)
    }
}

/// `f·v = v[0] f(v[1])`.
pub fn end_action(c: &Coaction, f: &Matrix) -> Result<Matrix> {
    let id = Matrix::identity(c.algebra().field(), c.dim());
    c.psi().mul(&id.kron(f)?)?.mul(c.rho())
}

pub fn end_module_from_comodule(c: &Coaction) -> Result<EndModule> {
    let field = c.algebra().field();
    let n = c.algebra().dim();
    let mut actions = Vec::with_capacity(n * n);
    for r in 0..n {
        for s in 0..n {
            let e = Matrix::from_fn(field, n, n, |i, j| if i == r && j == s { field.one() } else { field.zero() });
            actions.push(end_action(c, &e)?);
        }
    }
    EndModule::new(c.algebra().clone(), c.dim(), actions)
}

/// `ρ(v) = Σ fᵢ·v ⊗ aᵢ`, with right action `v·a = (− a)·v`.
pub fn comodule_from_end_module(e: &EndModule, dual: &DualBasis) -> Result<Coaction> {
    let a = e.algebra();
    let field = a.field();
    let (m, n) = (e.dim(), a.dim());
    let mut rho = Matrix::zeros(field, m * n, m);
    for i in 0..dual.len() {
        let fi = e.act(dual.f(i));
        let ai = dual.element(i);
        for p in 0..m {
            for (row, x) in fi.column_entries(p) {
                for (k, y) in ai.iter().enumerate() {
                    if !y.is_zero() {
                        rho.add_product_at(row * n + k, p, x, y);
                    }
                }
            }
        }
    }
    let right = (0..n).map(|j| e.act(&a.right_mul_matrix(&a.basis(j)))).collect();
    Coaction::new(a.clone(), right, rho)
}

/// The action of `f` on `V⊗_A W` by both formulas,
/// `Σᵢ fᵢ·v ⊗ f(aᵢ−)·w` and `Σⱼ f(−aⱼ)·v ⊗ fⱼ·w`.
pub fn end_action_on_tensor(dual: &DualBasis, t: &TensorOverA, f: &Matrix) -> Result<(Matrix, Matrix)> {
    let a = dual.algebra();
    let field = a.field();
    let (v, w) = (t.left(), t.rightf());
    let amb = t.ambient_dim();
    let mut first = Matrix::zeros(field, amb, amb);
    let mut second = Matrix::zeros(field, amb, amb);
    for i in 0..dual.len() {
        let ai = dual.element(i);
        let f_lai = f.mul(&a.left_mul_matrix(ai))?;
        let f_rai = f.mul(&a.right_mul_matrix(ai))?;
        first = first.add(&end_action(v, dual.f(i))?.kron(&end_action(w, &f_lai)?)?)?;
        second = second.add(&end_action(v, &f_rai)?.kron(&end_action(w, dual.f(i))?)?)?;
    }
    let q = t.quotient();
    Ok((q.induce(&first, q, "End action, first formula")?, q.induce(&second, q, "End action, second formula")?))
}

/// The braiding in `End_k(A)`-module form, `v⊗w ↦ Σᵢ fᵢ·w ⊗ v aᵢ`.
pub fn transported_braiding(dual: &DualBasis, vw: &TensorOverA, wv: &TensorOverA) -> Result<Matrix> {
    let a = dual.algebra();
    let field = a.field();
    let (v, w) = (vw.left(), vw.rightf());
    let mut amb = Matrix::zeros(field, vw.ambient_dim(), vw.ambient_dim());
    for i in 0..dual.len() {
        amb = amb.add(&v.right_action(dual.element(i)).kron(&end_action(w, dual.f(i))?)?)?;
    }
    let amb = flip(field, v.dim(), w.dim()).mul(&amb)?;
    vw.quotient().induce(&amb, wv.quotient(), "transported braiding")
}

/// The flip `v⊗w ↦ w⊗v` pushed to the quotients, where it is well defined.
pub fn flip_on_quotient(vw: &TensorOverA, wv: &TensorOverA) -> Result<Matrix> {
    let tau = flip(vw.left().algebra().field(), vw.left().dim(), vw.rightf().dim());
    vw.quotient().induce(&tau, wv.quotient(), "flip")
}
