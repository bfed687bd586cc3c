use std::sync::Arc;

use super::operator::{Provenance, YangBaxterOperator};
use crate::algebra::{matrix_algebra, Algebra};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar, Vector};
use crate::modules::{Bimodule, Coaction};
use crate::report::{Check, Report};

pub mod condition {
    pub const MIDDLE: &str = "R1 (x) aR2 (x) R3 = R1 (x) R2 (x) R3a";
    pub const NORMALIZED: &str = "R1R2 (x) R3 = R2 (x) R3R1 = 1 (x) 1";
    pub const FOUR_FOLD: &str = "consequence: R1 (x) R2 (x) 1 (x) R3 = r1R1 (x) r2 (x) r3R2 (x) R3";
    pub const CYCLIC: &str = "consequence: invariant under cyclic permutation";
}

/// `R = Σ r_xyz e_x⊗e_y⊗e_z ∈ A⊗A⊗A`, coefficient at `(x·n + y)·n + z`.
#[derive(Clone, Debug, PartialEq)]
pub struct RMatrix {
    algebra: Arc<Algebra>,
    r: Vector,
}

impl RMatrix {
    /// Verifies the two defining conditions.
    pub fn new(algebra: Arc<Algebra>, r: Vector) -> Result<RMatrix> {
        let n = algebra.dim();
        if r.len() != n * n * n {
            return Err(Error::dimension("element of A (x) A (x) A", n * n * n, r.len()));
        }
        let report = verify_rmatrix(&algebra, &r);
        if !report.all_passed() {
            return Err(Error::verification(report));
        }
        Ok(RMatrix { algebra, r })
    }

    /// `Σ_{i,j,k} e_ij ⊗ e_ki ⊗ e_jk` in `M_n(k)`, verified before it is returned.
    pub fn matrix_algebra(n: usize, field: Field) -> Result<RMatrix> {
        let a = Arc::new(matrix_algebra(n, field));
        let d = n * n;
        let mut r = vec![field.zero(); d * d * d];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    r[((i * n + j) * d + k * n + i) * d + j * n + k] = field.one();
                }
            }
        }
        RMatrix::new(a, r)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.r
    }

    fn terms(&self) -> Vec<(usize, usize, usize, &Scalar)> {
        terms(self.algebra.dim(), &self.r)
    }
}

fn terms(n: usize, r: &[Scalar]) -> Vec<(usize, usize, usize, &Scalar)> {
    r.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k / (n * n), (k / n) % n, k % n, c))
        .collect()
}

fn column(field: Field, v: &[Scalar]) -> Matrix {
    Matrix::from_column(field, v)
}

/// The two defining conditions, plus the four-fold identity and cyclic
/// invariance reported as derived consequences.
pub fn verify_rmatrix(a: &Algebra, r: &[Scalar]) -> Report {
    let mut report = verify_defining(a, r);
    if r.len() == a.dim().pow(3) {
        report.extend(verify_consequences(a, r));
    }
    report
}

fn verify_defining(a: &Algebra, r: &[Scalar]) -> Report {
    let n = a.dim();
    let field = a.field();
    let mut report = Report::new("R-matrix");
    if r.len() != n * n * n {
        report.push(Check::fail(condition::NORMALIZED, None, Some(format!("expected {} coefficients", n * n * n))));
        return report;
    }
    let ts = terms(n, r);
    let mut middle = Vec::new();
    for e in 0..n {
        let mut lhs = vec![field.zero(); n * n * n];
        let mut rhs = vec![field.zero(); n * n * n];
        for &(x, y, z, c) in &ts {
            for (k, s) in a.basis_product(e, y).iter().enumerate() {
                if !s.is_zero() {
                    lhs[(x * n + k) * n + z].add_product(c, s);
                }
            }
            for (k, s) in a.basis_product(z, e).iter().enumerate() {
                if !s.is_zero() {
                    rhs[(x * n + y) * n + k].add_product(c, s);
                }
            }
        }
        middle.push(Check::maps_equal_at(condition::MIDDLE, "both sides for basis a", &[e], &column(field, &lhs), &column(field, &rhs)));
    }
    report.push_all(condition::MIDDLE, middle);

    let one: Vec<Scalar> = a.unit().iter().flat_map(|u| a.unit().iter().map(move |v| u * v)).collect();
    let mut first = vec![field.zero(); n * n];
    let mut second = vec![field.zero(); n * n];
    for &(x, y, z, c) in &ts {
        for (k, s) in a.basis_product(x, y).iter().enumerate() {
            if !s.is_zero() {
                first[k * n + z].add_product(c, s);
            }
        }
        for (k, s) in a.basis_product(z, x).iter().enumerate() {
            if !s.is_zero() {
                second[y * n + k].add_product(c, s);
            }
        }
    }
    let target = column(field, &one);
    report.push_all(
        condition::NORMALIZED,
        [
            Check::maps_equal(condition::NORMALIZED, "R1R2 (x) R3 vs 1 (x) 1", &column(field, &first), &target),
            Check::maps_equal(condition::NORMALIZED, "R2 (x) R3R1 vs 1 (x) 1", &column(field, &second), &target),
        ],
    );
    report
}

fn verify_consequences(a: &Algebra, r: &[Scalar]) -> Report {
    let n = a.dim();
    let field = a.field();
    let ts = terms(n, r);
    let mut report = Report::new("R-matrix consequences");
    let idx4 = |p: usize, q: usize, s: usize, t: usize| ((p * n + q) * n + s) * n + t;
    let mut lhs = vec![field.zero(); n.pow(4)];
    let mut rhs = vec![field.zero(); n.pow(4)];
    for &(x, y, z, c) in &ts {
        for (k, u) in a.unit().iter().enumerate() {
            if !u.is_zero() {
                lhs[idx4(x, y, k, z)].add_product(c, u);
            }
        }
        for &(u, v, w, d) in &ts {
            let cd = c * d;
            for (p, s) in a.basis_product(u, x).iter().enumerate() {
                if s.is_zero() {
                    continue;
                }
                let cds = &cd * s;
                for (q, t) in a.basis_product(w, y).iter().enumerate() {
                    if !t.is_zero() {
                        rhs[idx4(p, v, q, z)].add_product(&cds, t);
                    }
                }
            }
        }
    }
    report.push(Check::maps_equal(condition::FOUR_FOLD, "coefficients in A(4)", &column(field, &lhs), &column(field, &rhs)));
    let mut rotated = vec![field.zero(); n * n * n];
    for &(x, y, z, c) in &ts {
        rotated[(z * n + x) * n + y] = c.clone();
    }
    report.push(Check::maps_equal(condition::CYCLIC, "R3 (x) R1 (x) R2 vs R", &column(field, &rotated), &column(field, r)));
    report
}

/// `ρ_R(v) = R¹ v R² ⊗ R³`, checked as a Yetter–Drinfeld module.
pub fn comodule_from_rmatrix(v: &Bimodule, r: &RMatrix) -> Result<Coaction> {
    if v.algebra() != r.algebra() {
        return Err(Error::Invalid("bimodule and R-matrix over different algebras".into()));
    }
    let n = r.algebra.dim();
    let m = v.dim();
    let mut rho = Matrix::zeros(r.algebra.field(), m * n, m);
    for (x, y, z, c) in r.terms() {
        let lr = v.left()[x].mul(&v.right()[y])?;
        for p in 0..m {
            for (row, s) in lr.column_entries(p) {
                rho.add_product_at(row * n + z, p, c, s);
            }
        }
    }
    Coaction::on_bimodule(v, rho)?.into_verified_yd()
}

/// `Ω_R(v⊗w) = R¹wR² ⊗ R³v`.
pub fn omega_r(v: &Bimodule, r: &RMatrix) -> Result<YangBaxterOperator> {
    let source = comodule_from_rmatrix(v, r)?;
    let m = v.dim();
    let mut omega = Matrix::zeros(r.algebra.field(), m * m, m * m);
    for (x, y, z, c) in r.terms() {
        let lr = v.left()[x].mul(&v.right()[y])?;
        let l = &v.left()[z];
        for p in 0..m {
            for q in 0..m {
                for (row1, s) in lr.column_entries(q) {
                    let cs = c * s;
                    for (row2, t) in l.column_entries(p) {
                        omega.add_product_at(row1 * m + row2, p * m + q, &cs, t);
                    }
                }
            }
        }
    }
    Ok(YangBaxterOperator::new(m, omega, Provenance::RMatrix)?.with_source(source))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::kn;
    use crate::modules::{comodule_from_yd, yd_from_comodule};
    use crate::ybe::{omega_cubed_check, omega_from_yd, qybe_check};

    const Q: Field = Field::Rational;

    #[test]
    fn trivial_r_over_k() {
        let a = Arc::new(kn(1, Q));
        let r = RMatrix::new(a.clone(), vec![Q.one()]).unwrap();
        let c = comodule_from_rmatrix(&Bimodule::regular(a.clone()), &r).unwrap();
        assert!(c.rho().is_identity());
        let op = omega_r(&Bimodule::regular(a), &r).unwrap();
        assert!(op.omega().is_identity());
    }

    #[test]
    fn matrix_algebra_r_verifies_with_consequences() {
        for n in 1..=2 {
            let r = RMatrix::matrix_algebra(n, Q).unwrap();
            let rep = verify_rmatrix(r.algebra(), r.coefficients());
            assert!(rep.all_passed(), "{}", rep.summary());
            assert_eq!(rep.checks.len(), 4);
        }
    }

    #[test]
    fn zero_is_not_an_r_matrix() {
        let a = Arc::new(matrix_algebra(2, Q));
        let rep = verify_rmatrix(&a, &vec![Q.zero(); 64]);
        assert!(!rep.get(condition::NORMALIZED).unwrap().passed);
        assert!(RMatrix::new(a, vec![Q.zero(); 64]).is_err());
    }

    #[test]
    fn m2_operator_is_a_solution_and_matches_the_closed_form() {
        let r = RMatrix::matrix_algebra(2, Q).unwrap();
        let a = r.algebra().clone();
        let v = Bimodule::regular(a.clone());
        let op = omega_r(&v, &r).unwrap();
        assert!(qybe_check(&op).all_passed());
        assert!(omega_cubed_check(&op).all_passed());
        // Ω(v⊗w) = Σ e_ij w e_ki ⊗ e_jk v
        let n = 2;
        let d = 4;
        let e = |i: usize, j: usize| a.basis(i * n + j);
        for p in 0..d {
            for q in 0..d {
                let mut expected = vec![Q.zero(); d * d];
                for i in 0..n {
                    for j in 0..n {
                        for k in 0..n {
                            let left = a.mul(&a.mul(&e(i, j), &a.basis(q)), &e(k, i));
                            let right = a.mul(&e(j, k), &a.basis(p));
                            for (s, x) in left.iter().enumerate() {
                                for (t, y) in right.iter().enumerate() {
                                    expected[s * d + t] = &expected[s * d + t] + &(x * y);
                                }
                            }
                        }
                    }
                }
                assert_eq!(op.omega().column(p * d + q), expected);
            }
        }
    }

    #[test]
    fn induced_left_action_is_the_original_one() {
        let r = RMatrix::matrix_algebra(2, Q).unwrap();
        let v = Bimodule::free(r.algebra().clone());
        let c = comodule_from_rmatrix(&v, &r).unwrap();
        let p = yd_from_comodule(&comodule_from_yd(&c)).unwrap();
        assert_eq!(p, c);
        assert_eq!(omega_from_yd(&c).unwrap().omega(), omega_r(&v, &r).unwrap().omega());
    }
}
