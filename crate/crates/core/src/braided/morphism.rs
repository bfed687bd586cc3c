use std::sync::Arc;

use super::tensor::{braiding_between, tensor_map_left, tensor_map_right, tensor_over_a};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exactla::{Matrix, Scalar};
use crate::modules::{counit_eps, descent_f, descent_f_map, descent_g, Coaction};
use crate::report::{Check, Report};

/// A linear map between comodules, `target.dim × source.dim`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComoduleMorphism {
    pub source: Coaction,
    pub target: Coaction,
    pub map: Matrix,
}

impl ComoduleMorphism {
    pub fn new(source: Coaction, target: Coaction, map: Matrix) -> Result<ComoduleMorphism> {
        if map.shape() != (target.dim(), source.dim()) {
            return Err(Error::dimension(
                "comodule morphism",
                format!("{}x{}", target.dim(), source.dim()),
                format!("{}x{}", map.rows(), map.cols()),
            ));
        }
        if source.algebra() != target.algebra() {
            return Err(Error::Invalid("morphism between comodules over different algebras".into()));
        }
        Ok(ComoduleMorphism { source, target, map })
    }

    /// `F(h) = h ⊗ A: F(N) → F(N')`.
    pub fn free(algebra: Arc<Algebra>, h: &Matrix) -> Result<ComoduleMorphism> {
        let source = descent_f(algebra.clone(), h.cols());
        let target = descent_f(algebra.clone(), h.rows());
        ComoduleMorphism::new(source, target, descent_f_map(&algebra, h))
    }

    /// `v ↦ s·v` on `V`.
    pub fn scalar(v: &Coaction, s: &Scalar) -> Result<ComoduleMorphism> {
        let map = Matrix::identity(v.algebra().field(), v.dim()).scale(s)?;
        ComoduleMorphism::new(v.clone(), v.clone(), map)
    }

    /// The descent counit `F(G(V)) → V`, `v⊗a ↦ va`.
    pub fn counit(v: &Coaction) -> Result<ComoduleMorphism> {
        let d = descent_g(v).cols();
        ComoduleMorphism::new(descent_f(v.algebra().clone(), d), v.clone(), counit_eps(v))
    }

    /// `ρ: V → V ⊗ A = F(V)`, colinear by coassociativity.
    pub fn coaction(v: &Coaction) -> Result<ComoduleMorphism> {
        ComoduleMorphism::new(v.clone(), descent_f(v.algebra().clone(), v.dim()), v.rho().clone())
    }
}

/// Right linearity, colinearity, and left linearity when both ends carry a left action.
pub fn verify_morphism(f: &ComoduleMorphism) -> Report {
    let a = f.source.algebra();
    let mut report = Report::new("comodule morphism");
    let mut right = Vec::new();
    for (j, (rs, rt)) in f.source.right().iter().zip(f.target.right()).enumerate() {
        let l = f.map.mul(rs).expect("shapes");
        let r = rt.mul(&f.map).expect("shapes");
        right.push(Check::maps_equal_at("right linear", "f(v e_j) vs f(v) e_j", &[j], &l, &r));
    }
    report.push_all("right linear", right);
    let lhs = f.target.rho().mul(&f.map).expect("shapes");
    let rhs = f
        .map
        .kron(&Matrix::identity(a.field(), a.dim()))
        .expect("field")
        .mul(f.source.rho())
        .expect("shapes");
    report.push(Check::maps_equal("colinear", "rho'(f(v)) vs (f (x) A) rho(v)", &lhs, &rhs));
    if let (Some(ls), Some(lt)) = (f.source.left(), f.target.left()) {
        let mut left = Vec::new();
        for (j, (x, y)) in ls.iter().zip(lt).enumerate() {
            let l = f.map.mul(x).expect("shapes");
            let r = y.mul(&f.map).expect("shapes");
            left.push(Check::maps_equal_at("left linear", "f(e_j v) vs e_j f(v)", &[j], &l, &r));
        }
        report.push_all("left linear", left);
    }
    report
}

pub mod naturality {
    pub const FIRST: &str = "naturality in the first variable: c_{V',W} (f W) = (W f) c_{V,W}";
    pub const SECOND: &str = "naturality in the second variable: c_{W,V'} (W f) = (f W) c_{W,V}";
}

/// Both naturality squares of the braiding for `f: V → V'` against `W`.
pub fn naturality_check(f: &ComoduleMorphism, w: &Coaction) -> Result<Report> {
    let mut report = verify_morphism(f);
    if !report.all_passed() {
        return Ok(report);
    }
    let (v, v2) = (&f.source, &f.target);
    let (vw, v2w) = (tensor_over_a(v, w)?, tensor_over_a(v2, w)?);
    let (wv, wv2) = (tensor_over_a(w, v)?, tensor_over_a(w, v2)?);

    let fw = tensor_map_left(&f.map, &vw, &v2w)?;
    let wf = tensor_map_right(&f.map, &wv, &wv2)?;
    let lhs = braiding_between(&v2w, &wv2)?.mul(&fw)?;
    let rhs = wf.mul(&braiding_between(&vw, &wv)?)?;
    report.push(Check::maps_equal(naturality::FIRST, "on the basis of V (x)_A W", &lhs, &rhs));

    let lhs = braiding_between(&wv2, &v2w)?.mul(&wf)?;
    let rhs = fw.mul(&braiding_between(&wv, &vw)?)?;
    report.push(Check::maps_equal(naturality::SECOND, "on the basis of W (x)_A V", &lhs, &rhs));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{kn, upper_triangular};
    use crate::exactla::Field;

    const Q: Field = Field::Rational;

    #[test]
    fn canonical_morphisms_are_natural() {
        let a = Arc::new(upper_triangular(2, Q));
        let v = Coaction::regular(a.clone());
        let w = descent_f(a.clone(), 1);
        let h = Matrix::from_i64_rows(Q, &[&[1, 2], &[0, 3], &[1, 1]]);
        let morphisms = [
            ComoduleMorphism::free(a.clone(), &h).unwrap(),
            ComoduleMorphism::scalar(&v, &Q.from_i64(-2)).unwrap(),
            ComoduleMorphism::counit(&v).unwrap(),
            ComoduleMorphism::coaction(&v).unwrap(),
        ];
        for f in &morphisms {
            let r = naturality_check(f, &w).unwrap();
            assert!(r.all_passed(), "{}", r.summary());
        }
    }

    #[test]
    fn non_colinear_maps_are_reported() {
        let a = Arc::new(kn(2, Q));
        let v = Coaction::regular(a);
        let swap = Matrix::from_i64_rows(Q, &[&[0, 1], &[1, 0]]);
        let f = ComoduleMorphism::new(v.clone(), v.clone(), swap).unwrap();
        let r = naturality_check(&f, &v).unwrap();
        assert!(!r.all_passed());
    }
}
