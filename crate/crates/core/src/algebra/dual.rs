use std::sync::Arc;

use super::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar, Vector};
use crate::report::{Check, Report};

/// The coordinate dual basis `Σᵢ aᵢ* ⊗ aᵢ` of a free algebra, together with
/// `fᵢ = φ(aᵢ* ⊗ 1)` where `φ(a* ⊗ b)(x) = ⟨a*, x⟩ b`.
///
/// Elements of `A* ⊗ A` are coefficient vectors over `aᵢ* ⊗ eⱼ` at flat
/// index `i·dim + j`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualBasis {
    algebra: Arc<Algebra>,
    functionals: Vec<Vector>,
    elements: Vec<Vector>,
    f_elems: Vec<Matrix>,
}

impl DualBasis {
    pub fn new(algebra: Arc<Algebra>) -> DualBasis {
        let n = algebra.dim();
        let functionals: Vec<Vector> = (0..n).map(|i| algebra.basis(i)).collect();
        let elements: Vec<Vector> = (0..n).map(|i| algebra.basis(i)).collect();
        let f_elems = functionals.iter().map(|a| phi(&algebra, a, algebra.unit())).collect();
        DualBasis {
            algebra,
            functionals,
            elements,
            f_elems,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn functional(&self, i: usize) -> &[Scalar] {
        &self.functionals[i]
    }

    pub fn element(&self, i: usize) -> &[Scalar] {
        &self.elements[i]
    }

    pub fn f(&self, i: usize) -> &Matrix {
        &self.f_elems[i]
    }

    /// `φ(a* ⊗ b)`.
    pub fn phi(&self, functional: &[Scalar], element: &[Scalar]) -> Matrix {
        phi(&self.algebra, functional, element)
    }

    /// `φ` applied to a coefficient vector of `A* ⊗ A`.
    pub fn phi_of(&self, coeffs: &[Scalar]) -> Result<Matrix> {
        let n = self.algebra.dim();
        if coeffs.len() != n * n {
            return Err(Error::dimension("element of A* (x) A", n * n, coeffs.len()));
        }
        let field = self.algebra.field();
        let mut out = Matrix::zeros(field, n, n);
        for i in 0..n {
            for j in 0..n {
                let c = &coeffs[i * n + j];
                if c.is_zero() {
                    continue;
                }
                let term = self.phi(&self.functionals[i], &self.algebra.basis(j)).scale(c)?;
                out = out.add(&term)?;
            }
        }
        Ok(out)
    }

    /// `φ⁻¹(f) = Σᵢ aᵢ* ⊗ f(aᵢ)` as a coefficient vector.
    pub fn phi_inverse(&self, f: &Matrix) -> Result<Vector> {
        let n = self.algebra.dim();
        if f.shape() != (n, n) {
            return Err(Error::dimension("endomorphism of A", format!("{n}x{n}"), format!("{:?}", f.shape())));
        }
        let mut out = vec![self.algebra.field().zero(); n * n];
        for (i, a) in self.elements.iter().enumerate() {
            let fa = f.apply(a)?;
            // the functional aᵢ* is the i-th coordinate, so it is already a basis element
            for (j, c) in fa.into_iter().enumerate() {
                out[i * n + j] = c;
            }
        }
        Ok(out)
    }

    /// Dual-basis identity `Σᵢ ⟨aᵢ*, x⟩ aᵢ = x`, the factorization of `φ(a*⊗a)`
    /// through `F`, and `φ ∘ φ⁻¹ = id` on every matrix unit.
    pub fn verify(&self) -> Report {
        let a = &self.algebra;
        let n = a.dim();
        let field = a.field();
        let mut report = Report::new("dual basis");

        let mut expansion = Vec::new();
        for x in 0..n {
            let e = a.basis(x);
            let mut sum = a.zero_vector();
            for i in 0..n {
                let pairing = dot(&self.functionals[i], &e);
                for (s, v) in sum.iter_mut().zip(&self.elements[i]) {
                    s.add_product(&pairing, v);
                }
            }
            let l = Matrix::from_column(field, &sum);
            let r = Matrix::from_column(field, &e);
            expansion.push(Check::maps_equal_at("dual basis identity", "sum <a_i*, x> a_i vs x", &[x], &l, &r));
        }
        report.push_all("dual basis identity", expansion);

        let one = a.unit().to_vec();
        let mut factor = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let (fs, b) = (&self.functionals[i], a.basis(j));
                let lhs = self.phi(fs, &b);
                let over_left = a.regular_f(&b, &one).mul(&self.phi(fs, &one)).expect("square");
                let over_right = a.regular_f(&one, &b).mul(&self.phi(fs, &one)).expect("square");
                factor.push(Check::maps_equal_at("phi through F", "F(a(x)1) phi(a*(x)1)", &[i, j], &lhs, &over_left));
                factor.push(Check::maps_equal_at("phi through F", "F(1(x)a) phi(a*(x)1)", &[i, j], &lhs, &over_right));
            }
        }
        report.push_all("phi(a*(x)a) = F(a(x)1) phi(a*(x)1) = F(1(x)a) phi(a*(x)1)", factor);

        let mut roundtrip = Vec::new();
        for r in 0..n {
            for c in 0..n {
                let unit = Matrix::from_fn(field, n, n, |i, j| {
                    if i == r && j == c {
                        field.one()
                    } else {
                        field.zero()
                    }
                });
                let back = self.phi_inverse(&unit).and_then(|v| self.phi_of(&v));
                roundtrip.push(match back {
                    Ok(m) => Check::maps_equal_at("phi phi^-1", "phi(phi^-1(E_rc)) vs E_rc", &[r, c], &m, &unit),
                    Err(e) => Check::fail("phi phi^-1", None, Some(e.to_string())),
                });
            }
        }
        report.push_all("phi o phi^-1 = id", roundtrip);
        report
    }
}

fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = a[0].field().zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc.add_product(x, y);
        }
    }
    acc
}

fn phi(algebra: &Algebra, functional: &[Scalar], element: &[Scalar]) -> Matrix {
    let field = algebra.field();
    Matrix::from_column(field, element)
        .mul(&Matrix::from_column(field, functional).transpose())
        .expect("outer product")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{kn, matrix_algebra, upper_triangular};
    use crate::exactla::Field;

    const Q: Field = Field::Rational;

    fn elementary(n: usize, i: usize, j: usize) -> Matrix {
        Matrix::from_fn(Q, n, n, |r, c| if r == i && c == j { Q.one() } else { Q.zero() })
    }

    #[test]
    fn phi_on_kn_gives_transposed_matrix_units() {
        let a = Arc::new(kn(3, Q));
        let d = DualBasis::new(a.clone());
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(d.phi(&a.basis(i), &a.basis(j)), elementary(3, j, i));
            }
        }
    }

    #[test]
    fn f_elements_on_kn() {
        let a = Arc::new(kn(3, Q));
        let d = DualBasis::new(a);
        for l in 0..3 {
            let mut expected = Matrix::zeros(Q, 3, 3);
            for r in 0..3 {
                expected = expected.add(&elementary(3, r, l)).unwrap();
            }
            assert_eq!(d.f(l), &expected);
        }
    }

    #[test]
    fn dual_basis_verifies() {
        for a in [kn(2, Q), matrix_algebra(2, Q), upper_triangular(2, Q)] {
            let d = DualBasis::new(Arc::new(a));
            let r = d.verify();
            assert!(r.all_passed(), "{}", r.summary());
        }
    }
}
