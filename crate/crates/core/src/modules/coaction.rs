use std::sync::Arc;

use super::bimodule::{check_action_shapes, verify_action, Bimodule, Side};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{flip, Matrix, Scalar};
use crate::report::{Check, Report};

/// Axiom names as they appear in comodule reports.
pub mod axiom {
    pub const COUNIT: &str = "counit: v[0] v[1] = v";
    pub const COASSOCIATIVITY: &str = "coassociativity: v[0][0] (x) v[0][1] (x) v[1] = v[0] (x) 1 (x) v[1]";
    pub const RIGHT_LINEAR: &str = "right linearity: rho(va) = v[0] (x) v[1] a";
    pub const LEFT_LINEAR: &str = "left linearity: rho(av) = v[0] (x) a v[1]";
    pub const BALANCED: &str = "balance: a v[0] (x) v[1] = v[0] a (x) v[1]";
    pub const SWAP_COUNIT: &str = "swapped counit: v[1] v[0] = v";
}

/// A right `A`-module `V` with a right `A⊗A`-coaction `ρ: V → V⊗A`, stored as
/// an `(m·n) × m` matrix. The left action is absent for plain comodules and
/// present once the module is viewed as Yetter–Drinfeld.
#[derive(Clone, Debug, PartialEq)]
pub struct Coaction {
    algebra: Arc<Algebra>,
    dim: usize,
    right: Vec<Matrix>,
    left: Option<Vec<Matrix>>,
    rho: Matrix,
    yd: bool,
}

impl Coaction {
    /// A right module with a coaction. Only shapes are checked; use
    /// [`verify_comodule`] for the axioms.
    pub fn new(algebra: Arc<Algebra>, right: Vec<Matrix>, rho: Matrix) -> Result<Coaction> {
        let dim = rho.cols();
        check_action_shapes(&algebra, dim, &right, "right action")?;
        check_rho(&algebra, dim, &rho)?;
        Ok(Coaction {
            algebra,
            dim,
            right,
            left: None,
            rho,
            yd: false,
        })
    }

    /// A bimodule with a coaction, to be checked as a Yetter–Drinfeld module.
    pub fn on_bimodule(module: &Bimodule, rho: Matrix) -> Result<Coaction> {
        check_rho(module.algebra(), module.dim(), &rho)?;
        Ok(Coaction {
            algebra: module.algebra().clone(),
            dim: module.dim(),
            right: module.right().to_vec(),
            left: Some(module.left().to_vec()),
            rho,
            yd: false,
        })
    }

    /// Assembles a coaction from parts the caller has already shape-checked.
    pub(crate) fn from_parts(
        algebra: Arc<Algebra>,
        right: Vec<Matrix>,
        left: Option<Vec<Matrix>>,
        rho: Matrix,
        yd: bool,
    ) -> Result<Coaction> {
        let dim = rho.cols();
        check_action_shapes(&algebra, dim, &right, "right action")?;
        if let Some(l) = &left {
            check_action_shapes(&algebra, dim, l, "left action")?;
        }
        check_rho(&algebra, dim, &rho)?;
        Ok(Coaction {
            algebra,
            dim,
            right,
            left,
            rho,
            yd,
        })
    }

    /// `V = A` with `ρ(a) = 1 ⊗ a`.
    pub fn regular(algebra: Arc<Algebra>) -> Coaction {
        let reg = Bimodule::regular(algebra.clone());
        let n = algebra.dim();
        let rho = algebra
            .unit_map()
            .kron(&Matrix::identity(algebra.field(), n))
            .expect("same field");
        Coaction {
            algebra,
            dim: n,
            right: reg.right().to_vec(),
            left: None,
            rho,
            yd: false,
        }
    }

    /// `V = A` with `ρ(a) = a ⊗ 1`, which is not right colinear unless `A = k`.
    pub fn flipped_regular(algebra: Arc<Algebra>) -> Coaction {
        let reg = Coaction::regular(algebra.clone());
        let n = algebra.dim();
        let rho = Matrix::identity(algebra.field(), n)
            .kron(&algebra.unit_map())
            .expect("same field");
        Coaction { rho, ..reg }
    }

    /// The zero coaction on the regular module.
    pub fn zero(algebra: Arc<Algebra>) -> Coaction {
        let reg = Coaction::regular(algebra.clone());
        let n = algebra.dim();
        Coaction {
            rho: Matrix::zeros(algebra.field(), n * n, n),
            ..reg
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn right(&self) -> &[Matrix] {
        &self.right
    }

    pub fn left(&self) -> Option<&[Matrix]> {
        self.left.as_deref()
    }

    pub fn rho(&self) -> &Matrix {
        &self.rho
    }

    /// True once the Yetter–Drinfeld axioms have been established.
    pub fn is_yd(&self) -> bool {
        self.yd
    }

    /// The underlying bimodule, when a left action is present.
    pub fn bimodule(&self) -> Option<Bimodule> {
        let left = self.left.clone()?;
        Bimodule::new_unchecked(self.algebra.clone(), self.dim, left, self.right.clone()).ok()
    }

    /// The same data with `ρ` replaced.
    pub fn with_rho(&self, rho: Matrix) -> Result<Coaction> {
        check_rho(&self.algebra, self.dim, &rho)?;
        Ok(Coaction {
            rho,
            yd: false,
            ..self.clone()
        })
    }

    /// The same data with a new left action, unflagged.
    pub fn with_left(&self, left: Vec<Matrix>) -> Result<Coaction> {
        check_action_shapes(&self.algebra, self.dim, &left, "left action")?;
        Ok(Coaction {
            left: Some(left),
            yd: false,
            ..self.clone()
        })
    }

    /// Checks the Yetter–Drinfeld axioms and flags the coaction on success.
    pub fn into_verified_yd(self) -> Result<Coaction> {
        let report = verify_comodule(&self, true);
        if !report.all_passed() {
            return Err(Error::verification(report));
        }
        Ok(Coaction { yd: true, ..self })
    }

    /// `ψ: V⊗A → V`, `v⊗a ↦ va`.
    pub fn psi(&self) -> Matrix {
        action_map(&self.algebra, self.dim, &self.right, Side::Right)
    }

    /// `A⊗V → V`, `a⊗v ↦ av`, if a left action is present.
    pub fn lambda(&self) -> Option<Matrix> {
        Some(action_map(&self.algebra, self.dim, self.left.as_ref()?, Side::Left))
    }

    pub fn right_action(&self, a: &[Scalar]) -> Matrix {
        Matrix::linear_combination(self.algebra.field(), self.dim, self.dim, a, &self.right)
    }

    pub fn left_action(&self, a: &[Scalar]) -> Option<Matrix> {
        let left = self.left.as_ref()?;
        Some(Matrix::linear_combination(self.algebra.field(), self.dim, self.dim, a, left))
    }

    /// Nonzero terms `(v', i, c)` of `ρ(e_p) = Σ c e_v' ⊗ e_i`.
    pub fn rho_terms(&self, p: usize) -> Vec<(usize, usize, Scalar)> {
        let n = self.algebra.dim();
        self.rho
            .column_entries(p)
            .into_iter()
            .map(|(r, c)| (r / n, r % n, c.clone()))
            .collect()
    }
}

fn check_rho(algebra: &Algebra, dim: usize, rho: &Matrix) -> Result<()> {
    let n = algebra.dim();
    if rho.shape() != (dim * n, dim) {
        return Err(Error::dimension(
            "coaction rho",
            format!("{}x{dim}", dim * n),
            format!("{}x{}", rho.rows(), rho.cols()),
        ));
    }
    if rho.field() != algebra.field() {
        return Err(Error::FieldMismatch(algebra.field(), rho.field()));
    }
    Ok(())
}

/// `V⊗A → V` for a right action, `A⊗V → V` for a left one.
pub(crate) fn action_map(algebra: &Algebra, dim: usize, mats: &[Matrix], side: Side) -> Matrix {
    let n = algebra.dim();
    let mut out = Matrix::zeros(algebra.field(), dim, dim * n);
    for (i, m) in mats.iter().enumerate() {
        for p in 0..dim {
            let col = match side {
                Side::Right => p * n + i,
                Side::Left => i * dim + p,
            };
            for (r, c) in m.column_entries(p) {
                out.set(r, col, c.clone());
            }
        }
    }
    out
}

/// Checks the comodule axioms, and with `yd` also left linearity and balance.
/// Every well-shaped coaction yields a report; failures carry a witness.
pub fn verify_comodule(c: &Coaction, yd: bool) -> Report {
    let a = &c.algebra;
    let field = a.field();
    let (m, n) = (c.dim, a.dim());
    let id_m = Matrix::identity(field, m);
    let id_n = Matrix::identity(field, n);
    let mut report = Report::new(if yd { "Yetter-Drinfeld module" } else { "comodule" });

    report.extend(verify_action(a, m, &c.right, Side::Right));

    let counit = c.psi().mul(&c.rho).expect("shapes");
    report.push(Check::maps_equal(axiom::COUNIT, "psi(rho(e_v)) vs e_v", &counit, &id_m));

    let lhs = c.rho.kron(&id_n).expect("field").mul(&c.rho).expect("shapes");
    let insert = id_m.kron(&a.unit_map().kron(&id_n).expect("field")).expect("field");
    let rhs = insert.mul(&c.rho).expect("shapes");
    report.push(Check::maps_equal(
        axiom::COASSOCIATIVITY,
        "(rho (x) A) rho(e_v) vs (V (x) 1 (x) A) rho(e_v)",
        &lhs,
        &rhs,
    ));

    let mut right = Vec::new();
    for (i, r) in c.right.iter().enumerate() {
        let l = c.rho.mul(r).expect("shapes");
        let rr = id_m.kron(&a.right_mul_matrix(&a.basis(i))).expect("field").mul(&c.rho).expect("shapes");
        right.push(Check::maps_equal_at(axiom::RIGHT_LINEAR, "rho(e_v e_i) vs v[0] (x) v[1] e_i", &[i], &l, &rr));
    }
    report.push_all(axiom::RIGHT_LINEAR, right);

    if yd {
        match &c.left {
            None => {
                let note = "no left action";
                report.push(Check::fail(axiom::LEFT_LINEAR, None, Some(note.into())));
                report.push(Check::fail(axiom::BALANCED, None, Some(note.into())));
            }
            Some(left) => {
                report.extend(verify_action(a, m, left, Side::Left));
                let mut commute = Vec::new();
                for (i, l) in left.iter().enumerate() {
                    for (j, r) in c.right.iter().enumerate() {
                        let lr = l.mul(r).expect("square");
                        let rl = r.mul(l).expect("square");
                        commute.push(Check::maps_equal_at("actions commute", "(e_i v) e_j vs e_i (v e_j)", &[i, j], &lr, &rl));
                    }
                }
                report.push_all("actions commute", commute);

                let mut lin = Vec::new();
                let mut bal = Vec::new();
                for (i, l) in left.iter().enumerate() {
                    let ll = c.rho.mul(l).expect("shapes");
                    let lr = id_m.kron(&a.left_mul_matrix(&a.basis(i))).expect("field").mul(&c.rho).expect("shapes");
                    lin.push(Check::maps_equal_at(axiom::LEFT_LINEAR, "rho(e_i e_v) vs v[0] (x) e_i v[1]", &[i], &ll, &lr));
                    let bl = l.kron(&id_n).expect("field").mul(&c.rho).expect("shapes");
                    let br = c.right[i].kron(&id_n).expect("field").mul(&c.rho).expect("shapes");
                    bal.push(Check::maps_equal_at(axiom::BALANCED, "e_i v[0] (x) v[1] vs v[0] e_i (x) v[1]", &[i], &bl, &br));
                }
                report.push_all(axiom::LEFT_LINEAR, lin);
                report.push_all(axiom::BALANCED, bal);
            }
        }
    }
    report
}

/// The identity `v[1] v[0] = v`, which every Yetter–Drinfeld module satisfies.
pub fn swap_counit_check(c: &Coaction) -> Check {
    let Some(lambda) = c.lambda() else {
        return Check::fail(axiom::SWAP_COUNIT, None, Some("no left action".into()));
    };
    let tau = flip(c.algebra.field(), c.dim, c.algebra.dim());
    let lhs = lambda.mul(&tau).expect("shapes").mul(&c.rho).expect("shapes");
    Check::maps_equal(axiom::SWAP_COUNIT, "v[1] v[0] vs v", &lhs, &Matrix::identity(c.algebra.field(), c.dim))
}

/// The functor `P`: equips a comodule with the left action `a·v = v[0] a v[1]`.
pub fn yd_from_comodule(c: &Coaction) -> Result<Coaction> {
    let report = verify_comodule(c, false);
    if !report.all_passed() {
        return Err(Error::verification(report));
    }
    let id_n = Matrix::identity(c.algebra.field(), c.algebra.dim());
    let psi = c.psi();
    let left = c
        .right
        .iter()
        .map(|r| psi.mul(&r.kron(&id_n).expect("field")).expect("shapes").mul(&c.rho).expect("shapes"))
        .collect();
    Ok(Coaction {
        left: Some(left),
        yd: true,
        ..c.clone()
    })
}

/// `c` itself if it already carries a left action, otherwise [`yd_from_comodule`].
pub fn with_induced_left(c: &Coaction) -> Result<Coaction> {
    if c.left.is_some() {
        Ok(c.clone())
    } else {
        yd_from_comodule(c)
    }
}

/// The forgetful functor: drops the left action and the flag.
pub fn comodule_from_yd(c: &Coaction) -> Coaction {
    Coaction {
        left: None,
        yd: false,
        ..c.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{kn, matrix_algebra, upper_triangular};
    use crate::exactla::Field;

    const Q: Field = Field::Rational;

    #[test]
    fn regular_comodule_passes() {
        for a in [kn(3, Q), matrix_algebra(2, Q), upper_triangular(2, Q)] {
            let c = Coaction::regular(Arc::new(a));
            let r = verify_comodule(&c, false);
            assert!(r.all_passed(), "{}", r.summary());
        }
    }

    #[test]
    fn flipped_regular_fails_right_linearity_with_witness() {
        let c = Coaction::flipped_regular(Arc::new(kn(2, Q)));
        let r = verify_comodule(&c, false);
        let check = r.get(axiom::RIGHT_LINEAR).unwrap();
        assert!(!check.passed);
        let w = check.witness.as_ref().unwrap();
        assert_ne!(w.lhs, w.rhs);
        assert!(r.get(axiom::COUNIT).unwrap().passed);
    }

    #[test]
    fn zero_coaction_fails_only_counit() {
        let a = Arc::new(matrix_algebra(2, Q));
        let z = Coaction::zero(a.clone());
        let z = z.with_left(Bimodule::regular(a).left().to_vec()).unwrap();
        let r = verify_comodule(&z, true);
        assert!(!r.get(axiom::COUNIT).unwrap().passed);
        for name in [axiom::COASSOCIATIVITY, axiom::RIGHT_LINEAR, axiom::LEFT_LINEAR, axiom::BALANCED] {
            assert!(r.get(name).unwrap().passed, "{name}");
        }
    }

    #[test]
    fn induced_left_action_on_regular_is_left_multiplication() {
        let a = Arc::new(upper_triangular(2, Q));
        let p = yd_from_comodule(&Coaction::regular(a.clone())).unwrap();
        assert_eq!(p.left().unwrap(), Bimodule::regular(a).left());
        assert!(verify_comodule(&p, true).all_passed());
        assert!(swap_counit_check(&p).passed);
    }

    #[test]
    fn commutative_induced_left_equals_right() {
        let p = yd_from_comodule(&Coaction::regular(Arc::new(kn(3, Q)))).unwrap();
        assert_eq!(p.left().unwrap(), p.right());
    }

    #[test]
    fn trivial_algebra_gives_scalar_action() {
        let p = yd_from_comodule(&Coaction::regular(Arc::new(kn(1, Q)))).unwrap();
        assert!(p.left().unwrap()[0].is_identity());
    }

    #[test]
    fn u_after_p_is_identity() {
        let c = Coaction::regular(Arc::new(matrix_algebra(2, Q)));
        assert_eq!(comodule_from_yd(&yd_from_comodule(&c).unwrap()), c);
    }

    #[test]
    fn p_rejects_non_comodules() {
        let c = Coaction::flipped_regular(Arc::new(kn(2, Q)));
        assert!(matches!(yd_from_comodule(&c), Err(Error::Verification(_))));
    }

    #[test]
    fn missing_left_action_fails_yd_checks() {
        let r = verify_comodule(&Coaction::regular(Arc::new(kn(2, Q))), true);
        assert!(!r.get(axiom::LEFT_LINEAR).unwrap().passed);
    }

    #[test]
    fn rho_shape_is_checked() {
        let a = Arc::new(kn(2, Q));
        let c = Coaction::regular(a);
        assert!(matches!(c.with_rho(Matrix::zeros(Q, 3, 2)), Err(Error::Dimension { .. })));
    }
}
