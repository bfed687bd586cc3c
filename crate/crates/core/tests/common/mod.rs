#![allow(dead_code)]

use coring::{Field, Matrix, Scalar};
use proptest::prelude::*;

pub const Q: Field = Field::Rational;

pub fn rational(n: i64, d: i64) -> Scalar {
    format!("{n}/{d}").parse().unwrap()
}

pub fn small_rational() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rational(n, d))
}

pub fn residue(p: u64) -> impl Strategy<Value = Scalar> {
    (0..p).prop_map(move |r| Field::prime(p).unwrap().from_i64(r as i64))
}

pub fn matrix_of(entries: impl Strategy<Value = Scalar>, field: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(entries, rows * cols)
        .prop_map(move |v| Matrix::from_fn(field, rows, cols, |i, j| v[i * cols + j].clone()))
}

pub fn rational_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| matrix_of(small_rational(), Q, r, c))
}

/// Plain integer n×n matrices, independent of the crate's arithmetic.
pub type IntMat = Vec<Vec<i64>>;

pub fn int_unit(n: usize, i: usize, j: usize) -> IntMat {
    (0..n).map(|r| (0..n).map(|c| i64::from(r == i && c == j)).collect()).collect()
}

pub fn int_mul(a: &IntMat, b: &IntMat) -> IntMat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// Row-major coordinates, matching the basis order of `mat:n`.
pub fn int_flat(a: &IntMat) -> Vec<i64> {
    a.iter().flatten().copied().collect()
}
