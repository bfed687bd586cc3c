mod common;

use common::*;
use coring::exactla::flip;
use coring::{Field, Matrix, Scalar};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in rational_matrix(5, 5)) {
        let (r, pivots) = m.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(&rr, &r);
        prop_assert_eq!(pivots, pivots2);
    }

    #[test]
    fn rank_plus_nullity(m in rational_matrix(5, 6)) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in kernel {
            prop_assert!(m.apply(&v).unwrap().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn inverse_is_two_sided(m in (1usize..=4).prop_flat_map(|n| matrix_of(small_rational(), Q, n, n))) {
        match m.inverse() {
            Ok(inv) => {
                prop_assert!(inv.mul(&m).unwrap().is_identity());
                prop_assert!(m.mul(&inv).unwrap().is_identity());
            }
            Err(_) => prop_assert!(m.rank() < m.rows()),
        }
    }

    #[test]
    fn kron_mixed_product(
        a in matrix_of(small_rational(), Q, 2, 3),
        b in matrix_of(small_rational(), Q, 2, 2),
        c in matrix_of(small_rational(), Q, 3, 2),
        d in matrix_of(small_rational(), Q, 2, 3),
    ) {
        let lhs = a.kron(&b).unwrap().mul(&c.kron(&d).unwrap()).unwrap();
        let rhs = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn kron_index_convention(a in matrix_of(small_rational(), Q, 2, 3), b in matrix_of(small_rational(), Q, 3, 2)) {
        let k = a.kron(&b).unwrap();
        for (i, j, l, m) in itertools(2, 3, 3, 2) {
            prop_assert_eq!(k.get(i * 3 + l, j * 2 + m), &(a.get(i, j) * b.get(l, m)));
        }
    }

    #[test]
    fn prime_arithmetic_matches_integers(x in 0u64..101, y in 0u64..101) {
        let f = Field::prime(101).unwrap();
        let (a, b) = (f.from_i64(x as i64), f.from_i64(y as i64));
        prop_assert_eq!((&a * &b).to_i64(), Some(((x * y) % 101) as i64));
        prop_assert_eq!((&a + &b).to_i64(), Some(((x + y) % 101) as i64));
        if y != 0 {
            prop_assert_eq!(&a.try_div(&b).unwrap() * &b, a);
        }
    }

    #[test]
    fn scalars_roundtrip_through_text(n in -1000i64..1000, d in 1i64..50, r in 0u64..13) {
        let q = rational(n, d);
        prop_assert_eq!(q.to_string().parse::<Scalar>().unwrap(), q);
        let p = Field::prime(13).unwrap().from_i64(r as i64);
        prop_assert_eq!(p.to_string().parse::<Scalar>().unwrap(), p);
    }

    #[test]
    fn rational_matrices_roundtrip_through_json(m in rational_matrix(4, 4)) {
        let text = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<Matrix>(&text).unwrap(), m);
    }

    #[test]
    fn prime_matrices_roundtrip_through_json(m in matrix_of(residue(7), Field::Prime(7), 3, 2)) {
        let text = serde_json::to_string(&m).unwrap();
        prop_assert_eq!(serde_json::from_str::<Matrix>(&text).unwrap(), m);
    }
}

fn itertools(a: usize, b: usize, c: usize, d: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..a {
        for j in 0..b {
            for l in 0..c {
                for m in 0..d {
                    out.push((i, j, l, m));
                }
            }
        }
    }
    out
}

#[test]
fn flip_is_an_involution_and_a_permutation() {
    let t = flip(Q, 2, 3);
    let back = flip(Q, 3, 2);
    assert!(back.mul(&t).unwrap().is_identity());
    // v_1 (x) w_2 at 1*3+2 goes to w_2 (x) v_1 at 2*2+1
    assert!(t.get(2 * 2 + 1, 3 + 2).is_one());
}

#[test]
fn over_f2_rows_reduce_by_hand() {
    let f2 = Field::prime(2).unwrap();
    let m = Matrix::from_i64_rows(f2, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
    // third row is the sum of the first two mod 2
    assert_eq!(m.rank(), 2);
    let (r, pivots) = m.rref();
    assert_eq!(pivots, vec![0, 1]);
    assert_eq!(r, Matrix::from_i64_rows(f2, &[&[1, 0, 1], &[0, 1, 1], &[0, 0, 0]]));
}
