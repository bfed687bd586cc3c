use std::sync::Arc;

use super::coaction::Coaction;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::Matrix;

/// The free comodule `F(N) = N ⊗ A`, `ρ(n⊗a) = n⊗1⊗a`, for `dim N = dim_n`.
pub fn descent_f(algebra: Arc<Algebra>, dim_n: usize) -> Coaction {
    let field = algebra.field();
    let n = algebra.dim();
    let id_n = Matrix::identity(field, n);
    let id_big = Matrix::identity(field, dim_n);
    let right = (0..n)
        .map(|i| id_big.kron(&algebra.right_mul_matrix(&algebra.basis(i))).expect("field"))
        .collect();
    let rho = id_big.kron(&algebra.unit_map().kron(&id_n).expect("field")).expect("field");
    Coaction::new(algebra, right, rho).expect("free comodule shapes")
}

/// `F` on a linear map `h: N → N'`: `h ⊗ A`.
pub fn descent_f_map(algebra: &Algebra, h: &Matrix) -> Matrix {
    h.kron(&Matrix::identity(algebra.field(), algebra.dim())).expect("field")
}

/// `G(V) = {v | ρ(v) = v ⊗ 1}`, as a matrix whose columns are a basis.
pub fn descent_g(c: &Coaction) -> Matrix {
    let a = c.algebra();
    let v_one = Matrix::identity(a.field(), c.dim()).kron(&a.unit_map()).expect("field");
    c.rho().sub(&v_one).expect("shapes").kernel_matrix()
}

/// `η_N: N → G(F(N))`, `n ↦ n⊗1`, in the coordinates of [`descent_g`].
pub fn unit_eta(algebra: Arc<Algebra>, dim_n: usize) -> Result<Matrix> {
    let field = algebra.field();
    let basis = descent_g(&descent_f(algebra.clone(), dim_n));
    let embed = Matrix::identity(field, dim_n).kron(&algebra.unit_map())?;
    let mut cols = Vec::with_capacity(dim_n);
    for s in 0..dim_n {
        let x = basis
            .solve(&embed.column(s))?
            .ok_or_else(|| Error::Invalid("n (x) 1 is not coinvariant".into()))?;
        cols.push(x);
    }
    Ok(Matrix::from_columns(field, basis.cols(), &cols))
}

/// `ε_V: G(V) ⊗ A → V`, `v⊗a ↦ va`, with `G(V)` in the coordinates of [`descent_g`].
pub fn counit_eps(c: &Coaction) -> Matrix {
    let basis = descent_g(c);
    let n = c.algebra().dim();
    let d = basis.cols();
    let mut out = Matrix::zeros(c.algebra().field(), c.dim(), d * n);
    for s in 0..d {
        let v = basis.column(s);
        for (i, r) in c.right().iter().enumerate() {
            let col = r.apply(&v).expect("shapes");
            for (row, x) in col.into_iter().enumerate() {
                out.set(row, s * n + i, x);
            }
        }
    }
    out
}

/// Square of full rank.
pub fn is_bijective(m: &Matrix) -> bool {
    m.is_square() && m.rank() == m.rows()
}
