//! Exact scalars and dense linear algebra.
//!
//! Tensor products of coordinate spaces follow one convention throughout the
//! crate: the basis vector of `V ⊗ W` at flat index `i·dim W + j` is `vᵢ ⊗ wⱼ`,
//! and triple products associate to the left, so `vᵢ ⊗ wⱼ ⊗ uₗ` sits at
//! `i·(dim W·dim U) + j·dim U + l`. [`Matrix::kron`] realizes this convention.

mod matrix;
mod scalar;

pub use matrix::{Matrix, Vector};
pub use scalar::{coerce, Field, Scalar, MAX_MODULUS};

pub(crate) use matrix::rref_rows;

/// The `i`-th standard basis vector of length `n`.
pub fn unit_vector(field: Field, n: usize, i: usize) -> Vector {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// The flip `τ: V ⊗ W → W ⊗ V` as a permutation matrix.
pub fn flip(field: Field, dim_v: usize, dim_w: usize) -> Matrix {
    let mut m = Matrix::zeros(field, dim_v * dim_w, dim_v * dim_w);
    for i in 0..dim_v {
        for j in 0..dim_w {
            m.set(j * dim_v + i, i * dim_w + j, field.one());
        }
    }
    m
}

/// Permutation of `U ⊗ V ⊗ W` exchanging the last two factors.
pub fn swap_last_two(field: Field, du: usize, dv: usize, dw: usize) -> Matrix {
    let n = du * dv * dw;
    let mut m = Matrix::zeros(field, n, n);
    for a in 0..du {
        for b in 0..dv {
            for c in 0..dw {
                m.set((a * dw + c) * dv + b, (a * dv + b) * dw + c, field.one());
            }
        }
    }
    m
}
