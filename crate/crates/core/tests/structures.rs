mod common;

use std::sync::Arc;

use common::*;
use coring::algebra::{kn, matrix_algebra, upper_triangular, Algebra};
use coring::modules::{
    descent_f, descent_from_yd, g_inverse, swap_counit_check, verify_comodule, verify_descent, yd_from_comodule,
    yd_from_descent, Coaction,
};
use coring::suite::{suite_comodules, Profile};
use coring::ybe::{comodule_from_rmatrix, RMatrix};
use coring::{Error, Scalar};
use proptest::prelude::*;

fn witnessed_failure(r: &coring::Report) -> bool {
    r.failures().any(|c| c.witness.is_some())
}

#[test]
fn matrix_unit_products_match_integer_matrices() {
    for n in 1..=3 {
        let a = matrix_algebra(n, Q);
        let d = n * n;
        for x in 0..d {
            for y in 0..d {
                let want = int_flat(&int_mul(&int_unit(n, x / n, x % n), &int_unit(n, y / n, y % n)));
                let got: Vec<i64> = a.basis_product(x, y).iter().map(|s| s.to_i64().unwrap()).collect();
                assert_eq!(got, want, "e_{x} e_{y} in M{n}");
            }
        }
    }
}

#[test]
fn opposite_is_an_involution() {
    for a in [matrix_algebra(2, Q), upper_triangular(2, Q), kn(3, Q)] {
        assert_eq!(a.opposite().opposite(), a);
    }
}

fn algebra_by_index(i: usize) -> Algebra {
    match i {
        0 => matrix_algebra(2, Q),
        1 => upper_triangular(2, Q),
        _ => kn(3, Q),
    }
}

fn element(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(small_rational(), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn perturbed_structure_constants_are_rejected(which in 0usize..3, t in 0usize..64, delta in (1i64..5).prop_union(-4i64..0)) {
        let a = algebra_by_index(which);
        let n = a.dim();
        let t = t % (n * n * n);
        let (i, j, k) = (t / (n * n), (t / n) % n, t % n);
        let sc: Vec<Scalar> = a
            .structure_constants()
            .iter()
            .enumerate()
            .map(|(s, x)| if s == t { x + &Q.from_i64(delta) } else { x.clone() })
            .collect();
        match Algebra::new(Q, n, a.unit().to_vec(), sc) {
            Err(Error::Verification(r)) => prop_assert!(witnessed_failure(&r), "sc[{}][{}][{}]", i, j, k),
            other => prop_assert!(false, "accepted a perturbed algebra: {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn regular_f_is_an_algebra_map(a in element(3), b in element(3), c in element(3), d in element(3)) {
        // F(a a' (x) b' b) = F(a (x) b) F(a' (x) b') in upper:2
        let alg = upper_triangular(2, Q);
        let lhs = alg.regular_f(&alg.mul(&a, &c), &alg.mul(&d, &b));
        let rhs = alg.regular_f(&a, &b).mul(&alg.regular_f(&c, &d)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn perturbed_coactions_are_caught(which in 0usize..3, cell in 0usize..1024, delta in 1i64..4) {
        let m2 = Arc::new(matrix_algebra(2, Q));
        let c = match which {
            0 => Coaction::regular(m2),
            1 => descent_f(m2, 2),
            _ => {
                let r = RMatrix::matrix_algebra(2, Q).unwrap();
                comodule_from_rmatrix(&coring::modules::Bimodule::regular(r.algebra().clone()), &r).unwrap()
            }
        };
        let rho = c.rho();
        let cell = cell % (rho.rows() * rho.cols());
        let (i, j) = (cell / rho.cols(), cell % rho.cols());
        let mut bad = rho.clone();
        bad.add_at(i, j, &Q.from_i64(delta));
        let report = verify_comodule(&c.with_rho(bad).unwrap(), c.is_yd());
        prop_assert!(witnessed_failure(&report), "rho[{}][{}] + {}", i, j, delta);
    }

    #[test]
    fn perturbed_descent_data_are_caught(cell in 0usize..256, delta in 1i64..4) {
        let c = yd_from_comodule(&Coaction::regular(Arc::new(upper_triangular(2, Q)))).unwrap();
        let d = descent_from_yd(&c).unwrap();
        let g = d.g();
        let cell = cell % (g.rows() * g.cols());
        let mut bad = g.clone();
        bad.add_at(cell / g.cols(), cell % g.cols(), &Q.from_i64(delta));
        prop_assert!(witnessed_failure(&verify_descent(&d.with_g(bad).unwrap())));
    }
}

#[test]
fn commutative_algebras_induce_the_right_action_on_the_left() {
    for (name, c) in suite_comodules(Profile::Quick).unwrap() {
        if !c.algebra().is_commutative() {
            continue;
        }
        let yd = yd_from_comodule(&c).unwrap();
        assert_eq!(yd.left().unwrap(), yd.right(), "{name}");
    }
}

#[test]
fn swapped_counit_holds_across_the_suite() {
    for (name, c) in suite_comodules(Profile::Quick).unwrap() {
        let yd = if c.is_yd() { c } else { yd_from_comodule(&c).unwrap() };
        assert!(swap_counit_check(&yd).passed, "{name}");
    }
}

#[test]
fn g_inverse_agrees_with_gaussian_elimination() {
    for (name, c) in suite_comodules(Profile::Quick).unwrap() {
        let yd = if c.is_yd() { c } else { yd_from_comodule(&c).unwrap() };
        let d = descent_from_yd(&yd).unwrap();
        assert_eq!(g_inverse(&d).unwrap(), d.g().inverse().unwrap(), "{name}");
    }
}

#[test]
fn free_descent_datum_is_the_middle_swap() {
    // g(a (x) n (x) b) = n (x) a (x) b on A (x) (N (x) A), N = k^2, A = k^2
    let a = Arc::new(kn(2, Q));
    let d = descent_from_yd(&yd_from_comodule(&descent_f(a, 2)).unwrap()).unwrap();
    let g = d.g();
    for x in 0..2 {
        for n in 0..2 {
            for b in 0..2 {
                let col = x * 4 + n * 2 + b;
                let row = (n * 2 + x) * 2 + b;
                for r in 0..8 {
                    assert_eq!(g.get(r, col).is_one(), r == row);
                    assert_eq!(g.get(r, col).is_zero(), r != row);
                }
            }
        }
    }
    assert!(verify_descent(&d).all_passed());
    assert_eq!(descent_from_yd(&yd_from_descent(&d).unwrap()).unwrap(), d);
}

#[test]
fn zero_coaction_fails_exactly_the_counit_axiom() {
    let r = verify_comodule(&Coaction::zero(Arc::new(upper_triangular(2, Q))), false);
    let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
    assert_eq!(failed, vec![coring::modules::axiom::COUNIT]);
}
