use crate::error::{Error, Result};
use crate::exactla::{rref_rows, Field, Matrix, Vector};
use crate::report::{Check, Report, Witness};

/// `X ⊗_A Y` as a quotient of `X ⊗ Y` by the span of `xa⊗y − x⊗ay`.
///
/// The relation space is kept in reduced row echelon form. Its non-pivot
/// coordinates index the quotient basis: `sect` embeds them and `proj`
/// rewrites each pivot coordinate in terms of them.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorQuotient {
    field: Field,
    x_dim: usize,
    y_dim: usize,
    relations: Matrix,
    pivots: Vec<usize>,
    free: Vec<usize>,
    proj: Matrix,
    sect: Matrix,
}

impl TensorQuotient {
    /// `x_right[j]` is `x ↦ x·eⱼ`, `y_left[j]` is `y ↦ eⱼ·y`.
    pub fn new(field: Field, x_dim: usize, y_dim: usize, x_right: &[Matrix], y_left: &[Matrix]) -> Result<TensorQuotient> {
        if x_right.len() != y_left.len() {
            return Err(Error::dimension("tensor over A: number of action matrices", x_right.len(), y_left.len()));
        }
        let amb = x_dim * y_dim;
        let id_x = Matrix::identity(field, x_dim);
        let id_y = Matrix::identity(field, y_dim);
        let mut rows: Vec<Vector> = Vec::new();
        for (r, l) in x_right.iter().zip(y_left) {
            let d = r.kron(&id_y)?.sub(&id_x.kron(l)?)?;
            for p in 0..amb {
                let col = d.column(p);
                if col.iter().any(|s| !s.is_zero()) {
                    rows.push(col);
                }
            }
        }
        let (reduced, pivots) = rref_rows(field, rows, amb);
        let rank = pivots.len();
        let relations = Matrix::from_fn(field, rank, amb, |i, j| reduced[i][j].clone());
        let mut is_pivot = vec![false; amb];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..amb).filter(|&c| !is_pivot[c]).collect();
        let dim = free.len();
        let mut sect = Matrix::zeros(field, amb, dim);
        let mut proj = Matrix::zeros(field, dim, amb);
        for (k, &c) in free.iter().enumerate() {
            sect.set(c, k, field.one());
            proj.set(k, c, field.one());
        }
        for (row, &p) in pivots.iter().enumerate() {
            for (k, &c) in free.iter().enumerate() {
                let x = relations.get(row, c);
                if !x.is_zero() {
                    proj.set(k, p, -x);
                }
            }
        }
        Ok(TensorQuotient {
            field,
            x_dim,
            y_dim,
            relations,
            pivots,
            free,
            proj,
            sect,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.x_dim * self.y_dim
    }

    pub fn factor_dims(&self) -> (usize, usize) {
        (self.x_dim, self.y_dim)
    }

    /// Relation basis, one row per relation.
    pub fn relations(&self) -> &Matrix {
        &self.relations
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ambient coordinates kept as the quotient basis.
    pub fn basis_coordinates(&self) -> &[usize] {
        &self.free
    }

    /// `π: X⊗Y → X⊗_A Y`.
    pub fn proj(&self) -> &Matrix {
        &self.proj
    }

    /// `σ: X⊗_A Y → X⊗Y`.
    pub fn sect(&self) -> &Matrix {
        &self.sect
    }

    /// Pushes an ambient map `X⊗Y → T` down to the quotient, after checking
    /// that its composite with `target` annihilates every relation.
    pub fn descend(&self, map: &Matrix, target: &Matrix, what: &str) -> Result<Matrix> {
        let through = target.mul(map)?;
        if let Some(check) = annihilation_failure(&through, &self.relations, what) {
            let mut report = Report::new(what);
            report.push(check);
            return Err(Error::verification(report));
        }
        through.mul(&self.sect)
    }

    /// Like [`TensorQuotient::descend`] with the quotient `other` as target.
    pub fn induce(&self, map: &Matrix, other: &TensorQuotient, what: &str) -> Result<Matrix> {
        self.descend(map, &other.proj, what)
    }
}

fn annihilation_failure(map: &Matrix, relations: &Matrix, what: &str) -> Option<Check> {
    for r in 0..relations.rows() {
        let rel = relations.row(r);
        let image = map.apply(rel).expect("shapes");
        if image.iter().any(|s| !s.is_zero()) {
            return Some(Check::fail(
                format!("{what}: well defined on the quotient"),
                Some(Witness {
                    indices: vec![r],
                    location: "relation vector vs its image".into(),
                    lhs: rel.to_vec(),
                    rhs: image,
                }),
                Some("a relation is not mapped into the target relations".into()),
            ));
        }
    }
    None
}
