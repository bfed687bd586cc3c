//! Dense row-major matrices over an exact field.

use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{coerce, Field, Scalar};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// A column vector.
pub type Vector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    /// Builds from rows; every entry must live in `field`.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != c {
                return Err(Error::dimension(format!("matrix row {i}"), c, row.len()));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(field, s.field()));
                }
                data.push(s);
            }
        }
        Ok(Matrix { field, rows: r, cols: c, data })
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Matrix::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// A single column.
    pub fn from_column(field: Field, v: &[Scalar]) -> Matrix {
        Matrix::from_fn(field, v.len(), 1, |i, _| v[i].clone())
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Matrix {
        Matrix::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "field mismatch in Matrix::set");
        self.data[i * self.cols + j] = v;
    }

    /// `self[i][j] += v`.
    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        self.data[i * self.cols + j] += v;
    }

    pub fn add_product_at(&mut self, i: usize, j: usize, a: &Scalar, b: &Scalar) {
        self.data[i * self.cols + j].add_product(a, b);
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Nonzero entries of column `j` as `(row, value)`.
    pub fn column_entries(&self, j: usize) -> Vec<(usize, &Scalar)> {
        (0..self.rows)
            .filter_map(|i| {
                let v = self.get(i, j);
                (!v.is_zero()).then_some((i, v))
            })
            .collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|s| !s.is_zero()).count()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }

    fn same_shape(&self, other: &Matrix, op: &str) -> Result<()> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::dimension(
                op,
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other, "matrix sum")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(self.with_data(data))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.same_shape(other, "matrix difference")?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(self.with_data(data))
    }

    pub fn scale(&self, s: &Scalar) -> Result<Matrix> {
        if s.field() != self.field {
            return Err(Error::FieldMismatch(self.field, s.field()));
        }
        let data = self.data.iter().map(|a| a * s).collect();
        Ok(self.with_data(data))
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| -a).collect();
        self.with_data(data)
    }

    fn with_data(&self, data: Vec<Scalar>) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Matrix product with the default execution strategy.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.mul_with(other, Exec::default())
    }

    /// Matrix product; rows of the result are computed independently and
    /// zero entries on either side are skipped.
    pub fn mul_with(&self, other: &Matrix, exec: Exec) -> Result<Matrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::dimension(
                "matrix product",
                format!("{} rows on the right", self.cols),
                other.rows,
            ));
        }
        let support: Vec<Vec<usize>> = (0..other.rows)
            .map(|k| (0..other.cols).filter(|&j| !other.get(k, j).is_zero()).collect())
            .collect();
        let zero = self.field.zero();
        let rows = exec.map_range(self.rows, |i| {
            let mut acc = vec![zero.clone(); other.cols];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for &j in &support[k] {
                    acc[j].add_product(a, other.get(k, j));
                }
            }
            acc
        });
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: other.cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::dimension("matrix-vector product", self.cols, v.len()));
        }
        let mut out = vec![self.field.zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (a, x) in self.row(i).iter().zip(v) {
                if !a.is_zero() && !x.is_zero() {
                    if x.field() != self.field {
                        return Err(Error::FieldMismatch(self.field, x.field()));
                    }
                    o.add_product(a, x);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product: entry `(i·p + k, j·q + l)` is `a[i][j]·b[k][l]`, so the
    /// basis vector at flat index `i·dim₂ + j` is `vᵢ ⊗ wⱼ`.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        let (p, q) = other.shape();
        let mut out = Matrix::zeros(self.field, self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.data[(i * p + k) * out.cols + j * q + l] = a * b;
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::dimension("hstack", self.rows, other.rows));
        }
        Ok(Matrix::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    /// Reduced row echelon form and pivot columns. Pivots are found scanning
    /// columns left to right and, within a column, rows top to bottom.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let rows: Vec<Vector> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let (reduced, pivots) = rref_rows(self.field, rows, self.cols);
        let data = reduced.into_iter().flatten().collect();
        (
            Matrix {
                field: self.field,
                rows: self.rows,
                cols: self.cols,
                data,
            },
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null-space basis: one vector per free column, with a 1 in that column.
    pub fn kernel_basis(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    /// The kernel basis as the columns of a `cols × nullity` matrix.
    pub fn kernel_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.cols, &self.kernel_basis())
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::dimension(
                "inverse",
                "square matrix",
                format!("{}x{}", self.rows, self.cols),
            ));
        }
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field, n))?;
        let (r, pivots) = aug.rref();
        let rank = pivots.iter().take_while(|&&p| p < n).count();
        if rank < n {
            return Err(Error::Singular { rank, size: n });
        }
        Ok(Matrix::from_fn(self.field, n, n, |i, j| r.get(i, n + j).clone()))
    }

    /// Some `x` with `self · x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>> {
        if b.len() != self.rows {
            return Err(Error::dimension("solve", self.rows, b.len()));
        }
        let aug = self.hstack(&Matrix::from_column(self.field, b))?;
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    pub fn in_column_space(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.solve(v)?.is_some())
    }

    /// Index of the first column where two same-shape matrices differ.
    pub fn first_differing_column(&self, other: &Matrix) -> Option<usize> {
        if self.shape() != other.shape() {
            return Some(0);
        }
        (0..self.cols).find(|&j| (0..self.rows).any(|i| self.get(i, j) != other.get(i, j)))
    }

    /// Re-homes every entry in `field` (see [`coerce`]).
    pub fn coerce(&self, field: Field) -> Result<Matrix> {
        let data = self.data.iter().map(|s| coerce(s, field)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            field,
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Sum of `coeffs[i] · mats[i]`.
    pub fn linear_combination(field: Field, rows: usize, cols: usize, coeffs: &[Scalar], mats: &[Matrix]) -> Matrix {
        let mut out = Matrix::zeros(field, rows, cols);
        for (c, m) in coeffs.iter().zip(mats) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.data.iter_mut().zip(&m.data) {
                if !x.is_zero() {
                    o.add_product(c, x);
                }
            }
        }
        out
    }
}

pub(crate) fn rref_rows(field: Field, mut rows: Vec<Vector>, ncols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..ncols {
        if prow >= rows.len() {
            break;
        }
        let Some(found) = (prow..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(prow, found);
        let inv = rows[prow][col].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[prow].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let support: Vec<usize> = (col..ncols).filter(|&j| !rows[prow][j].is_zero()).collect();
        let pivot_row = rows[prow].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == prow || row[col].is_zero() {
                continue;
            }
            let factor = -&row[col];
            for &j in &support {
                row[j].add_product(&factor, &pivot_row[j]);
            }
        }
        pivots.push(col);
        prow += 1;
    }
    debug_assert!(rows.iter().flatten().all(|s| s.field() == field));
    (rows, pivots)
}

pub(crate) fn kernel_from_rref(r: &Matrix, pivots: &[usize]) -> Vec<Vector> {
    let n = r.cols();
    let field = r.field();
    let mut is_pivot = vec![false; n];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); n];
            v[free] = field.one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free);
            }
            v
        })
        .collect()
}

impl Serialize for Matrix {
    /// Nested arrays of scalar strings, one inner array per row.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(self.row(i))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Matrix {
    /// The field is inferred from the entries (rational when there are none);
    /// use [`Matrix::coerce`] to move into a known field.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Matrix, D::Error> {
        let rows: Vec<Vec<Scalar>> = Vec::deserialize(deserializer)?;
        let field = rows
            .iter()
            .flatten()
            .find(|s| matches!(s, Scalar::Prime { .. }))
            .map_or(Field::Rational, Scalar::field);
        let rows = rows
            .into_iter()
            .map(|r| r.iter().map(|s| coerce(s, field)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Matrix::from_rows(field, rows).map_err(serde::de::Error::custom)
    }
}
