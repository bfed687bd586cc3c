use std::sync::Arc;

use super::quotient::TensorQuotient;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::modules::{with_induced_left, Bimodule, Coaction};
use crate::report::{Check, Report};

/// `V ⊗_A W` with its induced actions and coaction
/// `ρ(v⊗w) = v[0] ⊗ w[0] ⊗ v[1]w[1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorOverA {
    left: Coaction,
    rightf: Coaction,
    quotient: TensorQuotient,
    coaction: Coaction,
}

impl TensorOverA {
    /// The first factor, with its left action filled in.
    pub fn left(&self) -> &Coaction {
        &self.left
    }

    pub fn rightf(&self) -> &Coaction {
        &self.rightf
    }

    pub fn quotient(&self) -> &TensorQuotient {
        &self.quotient
    }

    pub fn coaction(&self) -> &Coaction {
        &self.coaction
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.quotient.ambient_dim()
    }

    pub fn relations(&self) -> &Matrix {
        self.quotient.relations()
    }

    pub fn proj(&self) -> &Matrix {
        self.quotient.proj()
    }

    pub fn sect(&self) -> &Matrix {
        self.quotient.sect()
    }
}

pub(crate) fn same_algebra(v: &Coaction, w: &Coaction) -> Result<()> {
    if Arc::ptr_eq(v.algebra(), w.algebra()) || v.algebra() == w.algebra() {
        Ok(())
    } else {
        Err(Error::Invalid("the two comodules live over different algebras".into()))
    }
}

pub fn tensor_over_a(v: &Coaction, w: &Coaction) -> Result<TensorOverA> {
    same_algebra(v, w)?;
    let v = with_induced_left(v)?;
    let w = with_induced_left(w)?;
    let a = v.algebra().clone();
    let field = a.field();
    let n = a.dim();
    let (mv, mw) = (v.dim(), w.dim());
    let (vl, wl) = (v.left().expect("induced"), w.left().expect("induced"));
    let quotient = TensorQuotient::new(field, mv, mw, v.right(), wl)?;

    let mut rho = Matrix::zeros(field, mv * mw * n, mv * mw);
    let wterms: Vec<_> = (0..mw).map(|q| w.rho_terms(q)).collect();
    for p in 0..mv {
        for (p2, i, c) in v.rho_terms(p) {
            for (q, terms) in wterms.iter().enumerate() {
                for (q2, j, d) in terms {
                    let cd = &c * d;
                    for (k, s) in a.basis_product(i, *j).iter().enumerate() {
                        if !s.is_zero() {
                            rho.add_product_at((p2 * mw + q2) * n + k, p * mw + q, &cd, s);
                        }
                    }
                }
            }
        }
    }
    let target = quotient.proj().kron(&Matrix::identity(field, n))?;
    let rho_q = quotient.descend(&rho, &target, "induced coaction")?;

    let (id_v, id_w) = (Matrix::identity(field, mv), Matrix::identity(field, mw));
    let mut right = Vec::with_capacity(n);
    let mut left = Vec::with_capacity(n);
    for j in 0..n {
        right.push(quotient.induce(&id_v.kron(&w.right()[j])?, &quotient, "induced right action")?);
        left.push(quotient.induce(&vl[j].kron(&id_w)?, &quotient, "induced left action")?);
    }
    let coaction = Coaction::from_parts(a, right, Some(left), rho_q, false)?;
    Ok(TensorOverA {
        left: v,
        rightf: w,
        quotient,
        coaction,
    })
}

/// `c_{V,W}: V⊗_A W → W⊗_A V`, `v⊗w ↦ w[0] ⊗ v·w[1]`.
pub fn braiding(v: &Coaction, w: &Coaction) -> Result<Matrix> {
    let vw = tensor_over_a(v, w)?;
    let wv = tensor_over_a(w, v)?;
    braiding_between(&vw, &wv)
}

/// The braiding between two already computed tensor products `V⊗_A W` and `W⊗_A V`.
pub fn braiding_between(vw: &TensorOverA, wv: &TensorOverA) -> Result<Matrix> {
    let (v, w) = (vw.left(), vw.rightf());
    let field = v.algebra().field();
    let (mv, mw) = (v.dim(), w.dim());
    let mut amb = Matrix::zeros(field, mw * mv, mv * mw);
    for q in 0..mw {
        for (q2, j, d) in w.rho_terms(q) {
            let r = &v.right()[j];
            for p in 0..mv {
                for (row, x) in r.column_entries(p) {
                    amb.add_product_at(q2 * mv + row, p * mw + q, &d, x);
                }
            }
        }
    }
    vw.quotient().induce(&amb, wv.quotient(), "braiding")
}

/// `c⁻¹_{V,W}: W⊗_A V → V⊗_A W`, `w⊗v ↦ w[1]·v ⊗ w[0]`.
pub fn braiding_inverse(v: &Coaction, w: &Coaction) -> Result<Matrix> {
    let vw = tensor_over_a(v, w)?;
    let wv = tensor_over_a(w, v)?;
    braiding_inverse_between(&vw, &wv)
}

pub fn braiding_inverse_between(vw: &TensorOverA, wv: &TensorOverA) -> Result<Matrix> {
    let (v, w) = (vw.left(), vw.rightf());
    let field = v.algebra().field();
    let (mv, mw) = (v.dim(), w.dim());
    let vl = v.left().expect("induced");
    let mut amb = Matrix::zeros(field, mv * mw, mw * mv);
    for q in 0..mw {
        for (q2, j, d) in w.rho_terms(q) {
            for p in 0..mv {
                for (row, x) in vl[j].column_entries(p) {
                    amb.add_product_at(row * mw + q2, q * mv + p, &d, x);
                }
            }
        }
    }
    wv.quotient().induce(&amb, vw.quotient(), "inverse braiding")
}

/// The half-braiding `c_{M,V}: M⊗_A V → V⊗_A M` of a comodule against an
/// arbitrary bimodule, with its inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct HalfBraiding {
    pub source: TensorQuotient,
    pub target: TensorQuotient,
    pub forward: Matrix,
    pub inverse: Matrix,
}

/// `m⊗v ↦ v[0] ⊗ m·v[1]`, inverse `v⊗m ↦ v[1]·m ⊗ v[0]`.
pub fn braid_against(m: &Bimodule, v: &Coaction) -> Result<HalfBraiding> {
    if m.algebra() != v.algebra() {
        return Err(Error::Invalid("bimodule and comodule live over different algebras".into()));
    }
    let v = with_induced_left(v)?;
    let field = v.algebra().field();
    let (dm, dv) = (m.dim(), v.dim());
    let source = TensorQuotient::new(field, dm, dv, m.right(), v.left().expect("induced"))?;
    let target = TensorQuotient::new(field, dv, dm, v.right(), m.left())?;
    let mut fwd = Matrix::zeros(field, dv * dm, dm * dv);
    let mut inv = Matrix::zeros(field, dm * dv, dv * dm);
    for p in 0..dv {
        for (p2, i, c) in v.rho_terms(p) {
            for e in 0..dm {
                for (row, x) in m.right()[i].column_entries(e) {
                    fwd.add_product_at(p2 * dm + row, e * dv + p, &c, x);
                }
                for (row, x) in m.left()[i].column_entries(e) {
                    inv.add_product_at(row * dv + p2, p * dm + e, &c, x);
                }
            }
        }
    }
    let forward = source.induce(&fwd, &target, "half-braiding")?;
    let inverse = target.induce(&inv, &source, "inverse half-braiding")?;
    Ok(HalfBraiding {
        source,
        target,
        forward,
        inverse,
    })
}

/// The unit constraints `A⊗_A V → V` (`a⊗v ↦ av`) and `V⊗_A A → V` (`v⊗a ↦ va`):
/// both bijective, both colinear, and compatible with `c_{A,V}`.
pub fn unit_check(v: &Coaction) -> Result<Report> {
    let v = with_induced_left(v)?;
    let a = v.algebra().clone();
    let field = a.field();
    let n = a.dim();
    let reg = crate::modules::yd_from_comodule(&Coaction::regular(a.clone()))?;
    let av = tensor_over_a(&reg, &v)?;
    let va = tensor_over_a(&v, &reg)?;
    let id = Matrix::identity(field, v.dim());
    let l = av.quotient().descend(&v.lambda().expect("induced"), &id, "left unit constraint")?;
    let r = va.quotient().descend(&v.psi(), &id, "right unit constraint")?;

    let mut report = Report::new("unit constraints");
    report.push(Check::condition(
        "A (x)_A V -> V bijective",
        crate::modules::is_bijective(&l),
        format!("{}x{} of rank {}", l.rows(), l.cols(), l.rank()),
    ));
    report.push(Check::condition(
        "V (x)_A A -> V bijective",
        crate::modules::is_bijective(&r),
        format!("{}x{} of rank {}", r.rows(), r.cols(), r.rank()),
    ));
    let id_n = Matrix::identity(field, n);
    for (name, map, t) in [("A (x)_A V -> V colinear", &l, &av), ("V (x)_A A -> V colinear", &r, &va)] {
        let lhs = v.rho().mul(map)?;
        let rhs = map.kron(&id_n)?.mul(t.coaction().rho())?;
        report.push(Check::maps_equal(name, "rho(u(x)) vs (u (x) A) rho(x)", &lhs, &rhs));
    }
    let half = braid_against(&crate::modules::Bimodule::regular(a), &v)?;
    let through = r.mul(&half.forward)?;
    report.push(Check::maps_equal(
        "c_{A,V} is the canonical identification",
        "(V (x)_A A -> V) c_{A,V} vs A (x)_A V -> V",
        &through,
        &l,
    ));
    Ok(report)
}

/// `α: (X⊗_A Y)⊗_A Z → X⊗_A(Y⊗_A Z)` and its inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct Associator {
    pub forward: Matrix,
    pub inverse: Matrix,
}

pub fn associator(x: &Coaction, y: &Coaction, z: &Coaction) -> Result<Associator> {
    let xy = tensor_over_a(x, y)?;
    let yz = tensor_over_a(y, z)?;
    let xy_z = tensor_over_a(xy.coaction(), z)?;
    let x_yz = tensor_over_a(x, yz.coaction())?;
    let field = x.algebra().field();
    let (ix, iz) = (Matrix::identity(field, x.dim()), Matrix::identity(field, z.dim()));
    let forward = x_yz
        .proj()
        .mul(&ix.kron(yz.proj())?)?
        .mul(&xy.sect().kron(&iz)?)?
        .mul(xy_z.sect())?;
    let inverse = xy_z
        .proj()
        .mul(&xy.proj().kron(&iz)?)?
        .mul(&ix.kron(yz.sect())?)?
        .mul(x_yz.sect())?;
    Ok(Associator { forward, inverse })
}

/// `f ⊗ W` on `X⊗_A W → X'⊗_A W`.
pub(crate) fn tensor_map_left(f: &Matrix, src: &TensorOverA, dst: &TensorOverA) -> Result<Matrix> {
    let id = Matrix::identity(f.field(), src.rightf().dim());
    src.quotient().induce(&f.kron(&id)?, dst.quotient(), "f (x) W")
}

/// `U ⊗ f` on `U⊗_A X → U⊗_A X'`.
pub(crate) fn tensor_map_right(f: &Matrix, src: &TensorOverA, dst: &TensorOverA) -> Result<Matrix> {
    let id = Matrix::identity(f.field(), src.left().dim());
    src.quotient().induce(&id.kron(f)?, dst.quotient(), "U (x) f")
}

pub mod hexagon {
    pub const FIRST: &str = "hexagon: c_{U,VW} = (V c_{U,W})(c_{U,V} W)";
    pub const SECOND: &str = "hexagon: c_{UV,W} = (c_{U,W} V)(U c_{V,W})";
    pub const INVERSES: &str = "braiding inverses are two-sided";
    pub const ASSOCIATORS: &str = "associators are two-sided inverses";
}

/// Both hexagon identities, with associators made explicit, plus the
/// inverse laws of the braidings and associators involved.
pub fn hexagon_check(u: &Coaction, v: &Coaction, w: &Coaction) -> Result<Report> {
    hexagon_check_with(u, v, w, &|vw, wv| braiding_between(vw, wv))
}

/// [`hexagon_check`] with a caller-supplied braiding, for testing the checker itself.
pub fn hexagon_check_with(
    u: &Coaction,
    v: &Coaction,
    w: &Coaction,
    braid: &dyn Fn(&TensorOverA, &TensorOverA) -> Result<Matrix>,
) -> Result<Report> {
    let t = |x: &Coaction, y: &Coaction| tensor_over_a(x, y);
    let (uv, vu, vw, wv, uw, wu) = (t(u, v)?, t(v, u)?, t(v, w)?, t(w, v)?, t(u, w)?, t(w, u)?);
    let c_uv = braid(&uv, &vu)?;
    let c_uw = braid(&uw, &wu)?;
    let c_vw = braid(&vw, &wv)?;

    let mut report = Report::new("hexagons");

    // first hexagon, from (UV)W to (VW)U
    let uv_w = t(uv.coaction(), w)?;
    let vu_w = t(vu.coaction(), w)?;
    let v_uw = t(v, uw.coaction())?;
    let v_wu = t(v, wu.coaction())?;
    let u_vw = t(u, vw.coaction())?;
    let vw_u = t(vw.coaction(), u)?;
    let a_uvw = associator(u, v, w)?;
    let a_vuw = associator(v, u, w)?;
    let a_vwu = associator(v, w, u)?;
    let lhs = a_vwu
        .inverse
        .mul(&tensor_map_right(&c_uw, &v_uw, &v_wu)?)?
        .mul(&a_vuw.forward)?
        .mul(&tensor_map_left(&c_uv, &uv_w, &vu_w)?)?;
    let rhs = braid(&u_vw, &vw_u)?.mul(&a_uvw.forward)?;
    report.push(Check::maps_equal(hexagon::FIRST, "on the basis of (U V) W", &lhs, &rhs));

    // second hexagon, from (UV)W to W(UV)
    let uv_w2 = &uv_w;
    let w_uv = t(w, uv.coaction())?;
    let u_wv = t(u, wv.coaction())?;
    let uw_v = t(uw.coaction(), v)?;
    let wu_v = t(wu.coaction(), v)?;
    let a_uwv = associator(u, w, v)?;
    let a_wuv = associator(w, u, v)?;
    let lhs = braid(uv_w2, &w_uv)?;
    let rhs = a_wuv
        .forward
        .mul(&tensor_map_left(&c_uw, &uw_v, &wu_v)?)?
        .mul(&a_uwv.inverse)?
        .mul(&tensor_map_right(&c_vw, &u_vw, &u_wv)?)?
        .mul(&a_uvw.forward)?;
    report.push(Check::maps_equal(hexagon::SECOND, "on the basis of (U V) W", &lhs, &rhs));

    let mut inverses = Vec::new();
    for (xy, yx, c) in [(&uv, &vu, &c_uv), (&uw, &wu, &c_uw), (&vw, &wv, &c_vw)] {
        let ci = braiding_inverse_between(xy, yx)?;
        let id_xy = Matrix::identity(c.field(), xy.dim());
        let id_yx = Matrix::identity(c.field(), yx.dim());
        inverses.push(Check::maps_equal(hexagon::INVERSES, "c^-1 c", &ci.mul(c)?, &id_xy));
        inverses.push(Check::maps_equal(hexagon::INVERSES, "c c^-1", &c.mul(&ci)?, &id_yx));
    }
    report.push_all(hexagon::INVERSES, inverses);

    let mut assoc = Vec::new();
    for a in [&a_uvw, &a_vuw, &a_vwu, &a_uwv, &a_wuv] {
        let fi = a.inverse.mul(&a.forward)?;
        let if_ = a.forward.mul(&a.inverse)?;
        assoc.push(Check::condition(hexagon::ASSOCIATORS, fi.is_identity() && if_.is_identity(), "not inverse"));
    }
    report.push_all(hexagon::ASSOCIATORS, assoc);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{kn, matrix_algebra, upper_triangular};
    use crate::exactla::{flip, Field};
    use crate::modules::{descent_f, verify_comodule};

    const Q: Field = Field::Rational;

    #[test]
    fn a_tensor_a_is_a() {
        for alg in [kn(2, Q), matrix_algebra(2, Q), upper_triangular(2, Q)] {
            let c = Coaction::regular(Arc::new(alg));
            let t = tensor_over_a(&c, &c).unwrap();
            assert_eq!(t.dim(), c.dim());
            assert!(verify_comodule(t.coaction(), true).all_passed());
            // c_{A,A} is the identity under A ⊗_A A ≅ A
            assert!(braiding(&c, &c).unwrap().is_identity());
        }
    }

    #[test]
    fn over_k_the_braiding_is_the_flip() {
        let a = Arc::new(kn(1, Q));
        let (v, w) = (descent_f(a.clone(), 2), descent_f(a, 3));
        let t = tensor_over_a(&v, &w).unwrap();
        assert_eq!(t.dim(), 6);
        assert_eq!(braiding(&v, &w).unwrap(), flip(Q, 2, 3));
    }

    #[test]
    fn free_rank_one_squared_over_k2() {
        let f = descent_f(Arc::new(kn(2, Q)), 1);
        assert_eq!(tensor_over_a(&f, &f).unwrap().dim(), 2);
    }

    #[test]
    fn inverse_is_two_sided() {
        let a = Arc::new(upper_triangular(2, Q));
        let (v, w) = (Coaction::regular(a.clone()), descent_f(a, 2));
        let c = braiding(&v, &w).unwrap();
        let ci = braiding_inverse(&v, &w).unwrap();
        assert!(ci.mul(&c).unwrap().is_identity());
        assert!(c.mul(&ci).unwrap().is_identity());
    }

    #[test]
    fn half_braiding_against_matrix_algebra() {
        let a = Arc::new(matrix_algebra(2, Q));
        let hb = braid_against(&Bimodule::regular(a.clone()), &descent_f(a, 1)).unwrap();
        assert!(hb.inverse.mul(&hb.forward).unwrap().is_identity());
        assert!(hb.forward.mul(&hb.inverse).unwrap().is_identity());
    }

    #[test]
    fn hexagons_over_k2() {
        let a = Arc::new(kn(2, Q));
        let r = Coaction::regular(a.clone());
        let r = hexagon_check(&r, &r, &r).unwrap();
        assert!(r.all_passed(), "{}", r.summary());
        let (f1, f2, ra) = (descent_f(a.clone(), 1), descent_f(a.clone(), 2), Coaction::regular(a));
        let r = hexagon_check(&f1, &f2, &ra).unwrap();
        assert!(r.all_passed(), "{}", r.summary());
    }

    #[test]
    fn unit_constraints_hold() {
        let a = Arc::new(upper_triangular(2, Q));
        for v in [Coaction::regular(a.clone()), descent_f(a.clone(), 2)] {
            let r = unit_check(&v).unwrap();
            assert!(r.all_passed(), "{}", r.summary());
        }
    }
}
