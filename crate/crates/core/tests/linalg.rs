use detcert::linalg::{det_exact, det_rational, inverse_exact, mat_mul, IntMatrix, RatMatrix, Rational};
use detcert::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand::rngs::StdRng;

/// Laplace expansion along the first row; independent of the elimination code.
fn cofactor_det(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect())
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * cofactor_det(&minor)
        })
        .sum()
}

fn to_int(m: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_i64_rows(m).unwrap()
}

#[test]
fn det_matches_cofactor_oracle_on_all_small_01_matrices() {
    for n in 1..=3usize {
        for code in 0u32..(1 << (n * n)) {
            let m: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| i64::from((code >> (i * n + j)) & 1)).collect())
                .collect();
            assert_eq!(
                det_exact(&to_int(&m)).unwrap(),
                BigInt::from(cofactor_det(&m)),
                "{m:?}"
            );
        }
    }
}

#[test]
fn det_matches_cofactor_oracle_on_random_pm1_matrices() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=5);
        let m: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..n).map(|_| if rng.gen() { 1 } else { -1 }).collect())
            .collect();
        assert_eq!(det_exact(&to_int(&m)).unwrap(), BigInt::from(cofactor_det(&m)));
    }
}

#[test]
fn corner_node_matrix_product_is_identity() {
    let a = to_int(&[vec![1, 0, 0, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1], vec![0, 0, 0, 1]]);
    let inv = inverse_exact(&a).unwrap();
    assert_eq!(mat_mul(&a.to_rational(), &inv).unwrap(), RatMatrix::identity(4));
}

#[test]
fn singular_inverse_is_rejected() {
    let a = to_int(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]]);
    assert_eq!(inverse_exact(&a), Err(Error::SingularMatrix));
}

#[test]
fn large_order_inverse_is_exact() {
    // Lower-triangular ones plus a corner entry in the first row, order 40: det = 1.
    let n = 40;
    let m: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(j <= i || (i == 0 && j == n - 1))).collect())
        .collect();
    let a = to_int(&m);
    assert_eq!(det_exact(&a).unwrap(), 1.into());
    let inv = inverse_exact(&a).unwrap();
    assert_eq!(mat_mul(&a.to_rational(), &inv).unwrap(), RatMatrix::identity(n));
}

fn entries_strategy(max_n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(-1i64..=1, n), n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn inverse_times_matrix_is_identity(m in entries_strategy(6)) {
        let a = to_int(&m);
        let det = det_exact(&a).unwrap();
        match inverse_exact(&a) {
            Ok(inv) => {
                prop_assert!(!det.is_zero());
                let n = m.len();
                prop_assert_eq!(mat_mul(&a.to_rational(), &inv).unwrap(), RatMatrix::identity(n));
                prop_assert_eq!(mat_mul(&inv, &a.to_rational()).unwrap(), RatMatrix::identity(n));
                // det(m) * det(m^-1) = 1
                let inv_det = det_rational(&inv).unwrap();
                prop_assert!((Rational::from_integer(det) * inv_det).is_one());
                for v in inv.entries() {
                    prop_assert!(v.denom().is_positive());
                    prop_assert!(v.numer().gcd(v.denom()).is_one());
                }
            }
            Err(e) => {
                prop_assert_eq!(e, Error::SingularMatrix);
                prop_assert!(det.is_zero());
            }
        }
    }

    #[test]
    fn det_agrees_with_oracle(m in entries_strategy(5)) {
        prop_assert_eq!(det_exact(&to_int(&m)).unwrap(), BigInt::from(cofactor_det(&m)));
    }
}
