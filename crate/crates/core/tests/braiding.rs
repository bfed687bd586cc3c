mod common;

use std::sync::Arc;

use common::*;
use coring::algebra::{kn, matrix_algebra, upper_triangular, Algebra, DualBasis};
use coring::braided::{
    braid_against, braiding, braiding_between, hexagon_check, naturality_check, tensor_over_a, transported_braiding,
    unit_check, verify_morphism, ComoduleMorphism,
};
use coring::modules::{descent_f, verify_comodule, yd_from_comodule, Bimodule, Coaction};
use coring::{Matrix, Scalar};
use proptest::prelude::*;

fn objects(a: &Arc<Algebra>) -> Vec<(&'static str, Coaction)> {
    vec![
        ("A", yd_from_comodule(&Coaction::regular(a.clone())).unwrap()),
        ("F(k)", yd_from_comodule(&descent_f(a.clone(), 1)).unwrap()),
        ("F(k^2)", yd_from_comodule(&descent_f(a.clone(), 2)).unwrap()),
    ]
}

#[test]
fn hexagons_over_the_upper_triangular_algebra() {
    let a = Arc::new(upper_triangular(2, Q));
    let objs = objects(&a);
    for (un, u) in &objs[..2] {
        for (vn, v) in &objs[..2] {
            for (wn, w) in &objs[..2] {
                let r = hexagon_check(u, v, w).unwrap();
                assert!(r.all_passed(), "({un}, {vn}, {wn}): {}", r.summary());
            }
        }
    }
    for (n, o) in &objs {
        assert!(unit_check(o).unwrap().all_passed(), "{n}");
    }
}

#[test]
fn tensor_coactions_are_comodules() {
    for a in [kn(2, Q), matrix_algebra(2, Q), upper_triangular(2, Q)] {
        let a = Arc::new(a);
        for (vn, v) in objects(&a) {
            for (wn, w) in objects(&a) {
                let t = tensor_over_a(&v, &w).unwrap();
                let r = verify_comodule(t.coaction(), true);
                assert!(r.all_passed(), "{vn} (x) {wn}: {}", r.summary());
                assert!(t.proj().mul(t.sect()).unwrap().is_identity());
                assert!(t.proj().mul(&t.relations().transpose()).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn transported_braiding_agrees_with_the_comodule_braiding() {
    for a in [matrix_algebra(2, Q), upper_triangular(2, Q)] {
        let a = Arc::new(a);
        let dual = DualBasis::new(a.clone());
        for (vn, v) in objects(&a) {
            for (wn, w) in objects(&a) {
                let (vw, wv) = (tensor_over_a(&v, &w).unwrap(), tensor_over_a(&w, &v).unwrap());
                let direct = braiding_between(&vw, &wv).unwrap();
                assert_eq!(transported_braiding(&dual, &vw, &wv).unwrap(), direct, "{vn} (x) {wn}");
            }
        }
    }
}

#[test]
fn braiding_over_kn_is_symmetric() {
    let a = Arc::new(kn(3, Q));
    for (vn, v) in objects(&a) {
        for (wn, w) in objects(&a) {
            let c = braiding(&v, &w).unwrap();
            let back = braiding(&w, &v).unwrap();
            assert!(back.mul(&c).unwrap().is_identity(), "{vn}, {wn}");
        }
    }
}

#[test]
fn regular_braiding_is_the_identity_on_a_tensor_a() {
    for a in [kn(2, Q), matrix_algebra(2, Q), upper_triangular(2, Q)] {
        let a = Arc::new(a);
        let v = yd_from_comodule(&Coaction::regular(a.clone())).unwrap();
        let c = braiding(&v, &v).unwrap();
        assert_eq!(c.rows(), a.dim());
        assert!(c.is_identity());
    }
}

#[test]
fn half_braiding_against_the_free_bimodule_recovers_rho() {
    // c_{A(x)A, V}(1 (x) 1 (x)_A v) = v[0] (x)_A (1 (x) v[1]), read off in V (x) A
    let a = Arc::new(matrix_algebra(2, Q));
    let v = yd_from_comodule(&descent_f(a.clone(), 1)).unwrap();
    let free = Bimodule::free(a.clone());
    let h = braid_against(&free, &v).unwrap();
    assert!(h.inverse.mul(&h.forward).unwrap().is_identity());
    assert!(h.forward.mul(&h.inverse).unwrap().is_identity());
}

fn rational_map(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    matrix_of(small_rational(), Q, rows, cols)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn free_maps_are_natural(h in (1usize..=2, 1usize..=2).prop_flat_map(|(r, c)| rational_map(r, c)), which in 0usize..3) {
        let a = Arc::new(upper_triangular(2, Q));
        let f = ComoduleMorphism::free(a.clone(), &h).unwrap();
        prop_assert!(verify_morphism(&f).all_passed());
        let w = &objects(&a)[which].1;
        let r = naturality_check(&f, w).unwrap();
        prop_assert!(r.all_passed(), "{}", r.summary());
    }

    #[test]
    fn scalar_maps_are_natural(s in small_rational(), which in 0usize..3) {
        let a = Arc::new(matrix_algebra(2, Q));
        let objs = objects(&a);
        let f = ComoduleMorphism::scalar(&objs[which].1, &s).unwrap();
        let r = naturality_check(&f, &objs[(which + 1) % 3].1).unwrap();
        prop_assert!(r.all_passed(), "{}", r.summary());
    }
}

#[test]
fn a_non_colinear_map_is_not_a_morphism() {
    let a = Arc::new(matrix_algebra(2, Q));
    let v = Coaction::regular(a.clone());
    // left multiplication by e_01 is right linear but does not commute with the coaction
    let map = a.left_mul_matrix(&a.basis(1));
    let f = ComoduleMorphism::new(v.clone(), v, map).unwrap();
    assert!(!verify_morphism(&f).all_passed());
    let _: Vec<Scalar> = a.unit().to_vec();
}
