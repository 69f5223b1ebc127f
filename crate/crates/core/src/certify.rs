//! Row-sum test on the inverse of the bordered node matrix.
//!
//! For a nondegenerate 0/1 matrix `M` of order `n`, every row sum
//! `s_i = Σ_j |l_ij|` (`i <= n`) of the inverse of its bordered node matrix
//! is at least 2. If `|det M|` is the maximum 0/1 determinant of order `n`,
//! every `s_i` equals 2; so any `s_i > 2` proves that `M` is not maximal.
//! The converse does not hold: all sums equal to 2 does not imply maximality.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binary::Matrix01;
use crate::error::{Error, Result};
use crate::linalg::{abs_sum, Rational};
use crate::simplex::{border_01, lagrange_data, LagrangeData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSums {
    pub sums: Vec<Rational>,
}

impl RowSums {
    pub fn order(&self) -> usize {
        self.sums.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    /// Some row sum exceeds 2, so `|det M| < h_n`.
    NotMaximal,
    /// Every row sum equals 2. Maximality is possible but not implied.
    NecessaryConditionHolds,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::NotMaximal => "NotMaximal",
            VerdictKind::NecessaryConditionHolds => "NecessaryConditionHolds",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    /// 1-based indices of rows with `s_i > 2`, ascending.
    pub witness_rows: Vec<usize>,
    pub det_value: BigInt,
    pub sums: RowSums,
}

/// `s_i = Σ_{j=1}^{n+1} |l_ij|` for `i = 1..n`; the last row is excluded.
pub fn row_abs_sums(l: &LagrangeData) -> RowSums {
    RowSums {
        sums: (0..l.dim()).map(|i| abs_sum(l.row(i))).collect(),
    }
}

/// Builds a verdict from precomputed Lagrange data of `border_01(m)`.
pub fn verdict_from_lagrange(l: &LagrangeData, det_value: BigInt) -> Result<Verdict> {
    let sums = row_abs_sums(l);
    let two = Rational::from_integer(2.into());
    let mut witness_rows = Vec::new();
    for (i, s) in sums.sums.iter().enumerate() {
        if *s < two {
            return Err(Error::InternalError(format!(
                "row sum {s} < 2 at row {}",
                i + 1
            )));
        }
        if *s > two {
            witness_rows.push(i + 1);
        }
    }
    let kind = if witness_rows.is_empty() {
        VerdictKind::NecessaryConditionHolds
    } else {
        VerdictKind::NotMaximal
    };
    Ok(Verdict {
        kind,
        witness_rows,
        det_value,
        sums,
    })
}

pub fn certify_01(m: &Matrix01) -> Result<Verdict> {
    let det_value = m.det();
    if det_value.is_zero() {
        return Err(Error::SingularMatrix);
    }
    let l = lagrange_data(&border_01(m)).map_err(|e| match e {
        Error::DegenerateSimplex => Error::SingularMatrix,
        other => other,
    })?;
    verdict_from_lagrange(&l, det_value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ri(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn corner_sums_are_two() {
        for n in 1..=8 {
            let l = lagrange_data(&border_01(&Matrix01::identity(n))).unwrap();
            assert_eq!(row_abs_sums(&l).sums, vec![ri(2); n]);
        }
    }

    #[test]
    fn identity_passes_without_being_maximal() {
        let v = certify_01(&Matrix01::identity(3)).unwrap();
        assert_eq!(v.kind, VerdictKind::NecessaryConditionHolds);
        assert_eq!(v.det_value, BigInt::from(1));
        assert!(v.witness_rows.is_empty());
    }

    #[test]
    fn maximal_order_three() {
        let m = Matrix01::from_rows(&[[0u8, 1, 1], [1, 0, 1], [1, 1, 0]]).unwrap();
        let v = certify_01(&m).unwrap();
        assert_eq!(v.kind, VerdictKind::NecessaryConditionHolds);
        assert_eq!(v.det_value, BigInt::from(2));
    }

    #[test]
    fn refutes_with_witness() {
        let m = Matrix01::from_rows(&[[1u8, 1, 1], [0, 1, 1], [1, 1, 0]]).unwrap();
        let v = certify_01(&m).unwrap();
        assert_eq!(v.kind, VerdictKind::NotMaximal);
        assert_eq!(v.witness_rows, vec![2]);
        assert_eq!(v.sums.sums, vec![ri(2), ri(4), ri(2)]);
    }

    #[test]
    fn singular_is_an_error() {
        let m = Matrix01::from_rows(&[[1u8, 1], [1, 1]]).unwrap();
        assert_eq!(certify_01(&m), Err(Error::SingularMatrix));
    }

    #[test]
    fn sums_below_two_are_internal_errors() {
        // Not a 0/1 simplex: the segment [0, 2] has s_1 = 1.
        use crate::simplex::node_from_vertices;
        let a = node_from_vertices(&[vec![ri(0)], vec![ri(2)]]).unwrap();
        let l = lagrange_data(&a).unwrap();
        assert!(matches!(
            verdict_from_lagrange(&l, BigInt::from(2)),
            Err(Error::InternalError(_))
        ));
    }
}
