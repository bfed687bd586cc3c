use std::sync::Arc;

use super::operator::{omega_from_comodule, Provenance, YangBaxterOperator};
use crate::algebra::{Algebra, AlgebraMorphism};
use crate::braided::TensorQuotient;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Vector};
use crate::modules::{verify_comodule, Coaction};
use crate::report::{Check, Report};

/// An element `x = Σ x_ij eᵢ⊗eⱼ` of `A⊗A` (coefficient at `i·n + j`).
#[derive(Clone, Debug, PartialEq)]
pub struct Grouplike {
    algebra: Arc<Algebra>,
    x: Vector,
}

pub mod condition {
    pub const MULTIPLY: &str = "x1 x2 = 1";
    pub const COMULTIPLY: &str = "X1 (x) X2 x1 (x) x2 = X1 (x) 1 (x) X2";
}

impl Grouplike {
    /// Checks both grouplike conditions.
    pub fn new(algebra: Arc<Algebra>, x: Vector) -> Result<Grouplike> {
        let g = Grouplike::new_unchecked(algebra, x)?;
        let report = verify_grouplike(&g.algebra, &g.x);
        if !report.all_passed() {
            return Err(Error::verification(report));
        }
        Ok(g)
    }

    pub fn new_unchecked(algebra: Arc<Algebra>, x: Vector) -> Result<Grouplike> {
        let n = algebra.dim();
        if x.len() != n * n {
            return Err(Error::dimension("element of A (x) A", n * n, x.len()));
        }
        Ok(Grouplike { algebra, x })
    }

    /// `1 ⊗ 1`.
    pub fn one(algebra: Arc<Algebra>) -> Grouplike {
        let u = algebra.unit().to_vec();
        let x = u.iter().flat_map(|a| u.iter().map(move |b| a * b)).collect();
        Grouplike { algebra, x }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn coefficients(&self) -> &[crate::exactla::Scalar] {
        &self.x
    }

    fn terms(&self) -> impl Iterator<Item = (usize, usize, &crate::exactla::Scalar)> {
        let n = self.algebra.dim();
        self.x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (k / n, k % n, c))
    }

    /// The coaction on `A` attached to `x`: `ρ(a) = x¹ ⊗ x²a`.
    pub fn comodule(&self) -> Coaction {
        let a = &self.algebra;
        let n = a.dim();
        let mut rho = Matrix::zeros(a.field(), n * n, n);
        for (i, j, c) in self.terms() {
            for b in 0..n {
                for (k, s) in a.basis_product(j, b).iter().enumerate() {
                    if !s.is_zero() {
                        rho.add_product_at(i * n + k, b, c, s);
                    }
                }
            }
        }
        let right = (0..n).map(|j| a.right_mul_matrix(&a.basis(j))).collect();
        Coaction::new(a.clone(), right, rho).expect("shapes")
    }
}

/// Both grouplike conditions as exact equalities.
pub fn verify_grouplike(a: &Algebra, x: &[crate::exactla::Scalar]) -> Report {
    let n = a.dim();
    let field = a.field();
    let mut report = Report::new("grouplike element");
    if x.len() != n * n {
        report.push(Check::fail(condition::MULTIPLY, None, Some(format!("expected {} coefficients", n * n))));
        return report;
    }
    let terms: Vec<_> = x.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k / n, k % n, c)).collect();

    let mut prod = a.zero_vector();
    for &(i, j, c) in &terms {
        for (o, s) in prod.iter_mut().zip(a.basis_product(i, j)) {
            o.add_product(c, s);
        }
    }
    report.push(Check::maps_equal(
        condition::MULTIPLY,
        "x1 x2 vs 1",
        &Matrix::from_column(field, &prod),
        &Matrix::from_column(field, a.unit()),
    ));

    let mut lhs = vec![field.zero(); n * n * n];
    let mut rhs = vec![field.zero(); n * n * n];
    for &(i, j, c) in &terms {
        for &(k, l, d) in &terms {
            let cd = c * d;
            for (m, s) in a.basis_product(j, k).iter().enumerate() {
                if !s.is_zero() {
                    lhs[(i * n + m) * n + l].add_product(&cd, s);
                }
            }
        }
        for (m, u) in a.unit().iter().enumerate() {
            if !u.is_zero() {
                rhs[(i * n + m) * n + j].add_product(c, u);
            }
        }
    }
    report.push(Check::maps_equal(
        condition::COMULTIPLY,
        "coefficients in A (x) A (x) A",
        &Matrix::from_column(field, &lhs),
        &Matrix::from_column(field, &rhs),
    ));
    report
}

/// `M^{co x} = {m | ρ(m) = m x¹ ⊗ x²}` as a matrix whose columns are a basis.
pub fn coinvariants(c: &Coaction, x: &Grouplike) -> Result<Matrix> {
    if c.algebra() != x.algebra() {
        return Err(Error::Invalid("comodule and grouplike element over different algebras".into()));
    }
    let n = c.algebra().dim();
    let m = c.dim();
    let mut insert = Matrix::zeros(c.algebra().field(), m * n, m);
    for (i, j, coeff) in x.terms() {
        for p in 0..m {
            for (row, s) in c.right()[i].column_entries(p) {
                insert.add_product_at(row * n + j, p, coeff, s);
            }
        }
    }
    Ok(c.rho().sub(&insert)?.kernel_matrix())
}

/// `A^{co x}` for the coaction `ρ(a) = x¹⊗x²a`, with a closure report
/// (contains 1, closed under multiplication).
pub fn coinvariant_subalgebra(x: &Grouplike) -> Result<(Matrix, Report)> {
    let a = x.algebra();
    let basis = coinvariants(&x.comodule(), x)?;
    let mut report = Report::new("coinvariant subalgebra");
    report.push(Check::condition("contains 1", basis.in_column_space(a.unit())?, "1 is not coinvariant"));
    let mut closed = Vec::new();
    for s in 0..basis.cols() {
        for t in 0..basis.cols() {
            let p = a.mul(&basis.column(s), &basis.column(t));
            closed.push(Check::condition(
                "closed under multiplication",
                basis.in_column_space(&p)?,
                format!("product of basis vectors {s} and {t} leaves the subspace"),
            ));
        }
    }
    report.push_all("closed under multiplication", closed);
    Ok((basis, report))
}

/// `N ⊗_B A` with `ρ(n⊗a) = n ⊗ x¹ ⊗ x²a`.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedComodule {
    pub quotient: TensorQuotient,
    pub coaction: Coaction,
}

/// `n_right[k]` is the action of the `k`-th basis element of `B` on `N`.
pub fn induced_comodule(x: &Grouplike, i: &AlgebraMorphism, n_right: &[Matrix]) -> Result<InducedComodule> {
    let a = x.algebra();
    if i.target().as_ref() != a.as_ref() {
        return Err(Error::Invalid("algebra morphism must land in the algebra of x".into()));
    }
    let field = a.field();
    let n = a.dim();
    let b = i.source();
    if n_right.len() != b.dim() {
        return Err(Error::dimension("right B-action on N", b.dim(), n_right.len()));
    }
    let dn = n_right.first().map(|m| m.rows()).unwrap_or(0);
    crate::modules::verify_action(b, dn, n_right, crate::modules::Side::Right)
        .all_passed()
        .then_some(())
        .ok_or_else(|| Error::Invalid("N is not a right B-module".into()))?;

    let (cos, _) = coinvariant_subalgebra(x)?;
    for k in 0..b.dim() {
        if !cos.in_column_space(&i.map().column(k))? {
            let mut report = Report::new("induced comodule");
            report.push(Check::fail(
                "i lands in the coinvariants",
                None,
                Some(format!("i(b_{k}) is not coinvariant")),
            ));
            return Err(Error::verification(report));
        }
    }

    let b_left: Vec<Matrix> = (0..b.dim()).map(|k| a.left_mul_matrix(&i.map().column(k))).collect();
    let quotient = TensorQuotient::new(field, dn, n, n_right, &b_left)?;

    let g = x.comodule();
    let id_n = Matrix::identity(field, dn);
    let amb_rho = id_n.kron(g.rho())?;
    let target = quotient.proj().kron(&Matrix::identity(field, n))?;
    let rho = quotient.descend(&amb_rho, &target, "induced coaction")?;
    let right = (0..n)
        .map(|j| quotient.induce(&id_n.kron(&a.right_mul_matrix(&a.basis(j)))?, &quotient, "right action"))
        .collect::<Result<Vec<_>>>()?;
    let coaction = Coaction::new(a.clone(), right, rho)?;
    Ok(InducedComodule { quotient, coaction })
}

/// The operator of an induced comodule, and the check that it agrees with
/// `Ω((n⊗a)⊗(m⊗b)) = (m⊗x¹) ⊗ (n⊗X¹x²bX²a)` evaluated on ambient representatives.
pub fn induced_operator(x: &Grouplike, induced: &InducedComodule) -> Result<(YangBaxterOperator, Check)> {
    let a = x.algebra();
    let field = a.field();
    let n = a.dim();
    let op = omega_from_comodule(&induced.coaction)?;
    let op = YangBaxterOperator::new(op.space_dim(), op.omega().clone(), Provenance::GrouplikeInduced)?
        .with_source(induced.coaction.clone());

    let (dn, _) = induced.quotient.factor_dims();
    let d = dn * n;
    let terms: Vec<_> = x.terms().map(|(i, j, c)| (i, j, c.clone())).collect();
    let mut amb = Matrix::zeros(field, d * d, d * d);
    for s in 0..dn {
        for ea in 0..n {
            for t in 0..dn {
                for eb in 0..n {
                    let col = (s * n + ea) * d + t * n + eb;
                    for (i, j, c) in &terms {
                        for (k, l, dd) in &terms {
                            // X¹ x² b X² a with X = e_k ⊗ e_l and x = e_i ⊗ e_j
                            let mut word = a.mul(&a.basis(*k), &a.basis(*j));
                            word = a.mul(&word, &a.basis(eb));
                            word = a.mul(&word, &a.basis(*l));
                            word = a.mul(&word, &a.basis(ea));
                            let cd = c * dd;
                            for (z, w) in word.iter().enumerate() {
                                if !w.is_zero() {
                                    amb.add_product_at((t * n + i) * d + s * n + z, col, &cd, w);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let pp = induced.quotient.proj().kron(induced.quotient.proj())?;
    let ss = induced.quotient.sect().kron(induced.quotient.sect())?;
    let formula = pp.mul(&amb)?.mul(&ss)?;
    let check = Check::maps_equal(
        "induced operator formula",
        "comodule operator vs closed formula on N (x)_B A",
        op.omega(),
        &formula,
    );
    Ok((op, check))
}

/// `induced_comodule` with `B = k` and `N = k^dim_n`.
pub fn induced_over_k(x: &Grouplike, dim_n: usize) -> Result<InducedComodule> {
    let a = x.algebra();
    let unit = AlgebraMorphism::unit_of(a.clone());
    induced_comodule(x, &unit, &[Matrix::identity(a.field(), dim_n)])
}

/// Comodule axioms of the induced coaction, as a convenience for reports.
pub fn verify_induced(c: &InducedComodule) -> Report {
    verify_comodule(&c.coaction, false)
}
