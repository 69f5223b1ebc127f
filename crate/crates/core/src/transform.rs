//! Conversions between ±1 matrices of order `n+1` and 0/1 matrices of order `n`.
//!
//! Forward direction: negate every column whose first entry is -1, then every
//! row whose first entry is -1; the result `V` has an all-ones first row and
//! column. The trailing `n x n` block `W` of `V` is mapped entrywise by
//! `1 -> 0`, `-1 -> 1` to obtain `T`. Then `|det T| = |det U| / 2^n`.
//!
//! The map `1 -> 0, -1 -> 1` is the restriction of `x -> (1 - x) / 2`, which
//! sends `[-1, 1]^n` onto `[0, 1]^n`.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::binary::{Matrix01, MatrixPM1};
use crate::error::{Error, Result};

/// Negates columns, then rows, so that the first row and column are all 1's.
pub fn normalize_pm1(u: &MatrixPM1) -> MatrixPM1 {
    let n = u.order();
    let mut v = u.clone();
    let entries = v.entries_mut();
    for j in 0..n {
        if entries[j] == -1 {
            for i in 0..n {
                entries[i * n + j] = -entries[i * n + j];
            }
        }
    }
    for i in 0..n {
        if entries[i * n] == -1 {
            for x in &mut entries[i * n..(i + 1) * n] {
                *x = -*x;
            }
        }
    }
    v
}

/// Maps a ±1 matrix of order `n+1` to the 0/1 matrix `T` of order `n`.
pub fn pm1_to_01(u: &MatrixPM1) -> Result<Matrix01> {
    let order = u.order();
    if order < 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: order,
        });
    }
    let v = normalize_pm1(u);
    let n = order - 1;
    let entries = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            u8::from(v.get(i + 1, j + 1) == -1)
        })
        .collect();
    Matrix01::new(n, entries)
}

/// Inverse of steps 2 and 3: borders `1 - 2T` with a row and column of 1's.
pub fn zero_one_to_pm1(t: &Matrix01) -> MatrixPM1 {
    let n = t.order();
    let m = n + 1;
    let entries = (0..m * m)
        .map(|k| {
            let (i, j) = (k / m, k % m);
            if i == 0 || j == 0 {
                1
            } else {
                1 - 2 * t.get(i - 1, j - 1) as i8
            }
        })
        .collect();
    MatrixPM1::new(m, entries).expect("entries are ±1 by construction")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetIdentityCheck {
    /// `2^n · |det T|`
    pub lhs: BigInt,
    /// `|det U|`
    pub rhs: BigInt,
    pub holds: bool,
}

/// Verifies `2^n · |det(pm1_to_01(u))| = |det u|` exactly.
pub fn check_det_identity(u: &MatrixPM1) -> Result<DetIdentityCheck> {
    let t = pm1_to_01(u)?;
    let lhs = t.det().abs() << t.order();
    let rhs = u.det().abs();
    let holds = lhs == rhs;
    Ok(DetIdentityCheck { lhs, rhs, holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(rows: &[&[i8]]) -> MatrixPM1 {
        MatrixPM1::from_rows(rows).unwrap()
    }

    fn hadamard4() -> MatrixPM1 {
        pm(&[
            &[1, -1, 1, -1],
            &[1, 1, 1, 1],
            &[1, -1, -1, 1],
            &[1, 1, -1, -1],
        ])
    }

    #[test]
    fn normalize_examples() {
        let h2 = pm(&[&[1, 1], &[1, -1]]);
        assert_eq!(normalize_pm1(&h2), h2);
        assert_eq!(normalize_pm1(&pm(&[&[-1, 1], &[1, 1]])), h2);
        let v = normalize_pm1(&hadamard4());
        assert!(v.row(0).iter().all(|&x| x == 1));
        assert!((0..4).all(|i| v.get(i, 0) == 1));
        assert_eq!(v.det().abs(), BigInt::from(16));
        assert_eq!(hadamard4().det().abs(), BigInt::from(16));
    }

    #[test]
    fn forward_examples() {
        let t = pm1_to_01(&pm(&[&[1, 1], &[1, -1]])).unwrap();
        assert_eq!(t, Matrix01::from_rows(&[[1u8]]).unwrap());
        let t = pm1_to_01(&hadamard4()).unwrap();
        assert_eq!(t.order(), 3);
        assert_eq!(t.det().abs(), BigInt::from(2));
        let t = pm1_to_01(&pm(&[&[1, 1], &[1, 1]])).unwrap();
        assert_eq!(t, Matrix01::from_rows(&[[0u8]]).unwrap());
        assert!(pm1_to_01(&pm(&[&[1]])).is_err());
    }

    #[test]
    fn inverse_examples() {
        let one = Matrix01::from_rows(&[[1u8]]).unwrap();
        assert_eq!(zero_one_to_pm1(&one), pm(&[&[1, 1], &[1, -1]]));
        let zero = Matrix01::from_rows(&[[0u8]]).unwrap();
        let v = zero_one_to_pm1(&zero);
        assert_eq!(v, pm(&[&[1, 1], &[1, 1]]));
        assert_eq!(v.det(), BigInt::from(0));
        let v = zero_one_to_pm1(&Matrix01::identity(2));
        assert_eq!(v, pm(&[&[1, 1, 1], &[1, -1, 1], &[1, 1, -1]]));
        assert_eq!(v.det().abs(), BigInt::from(4));
    }

    #[test]
    fn det_identity_examples() {
        let c = check_det_identity(&pm(&[&[1, 1], &[1, -1]])).unwrap();
        assert_eq!((c.lhs, c.rhs, c.holds), (BigInt::from(2), BigInt::from(2), true));
        let c = check_det_identity(&hadamard4()).unwrap();
        assert_eq!((c.lhs, c.rhs, c.holds), (BigInt::from(16), BigInt::from(16), true));
    }
}
