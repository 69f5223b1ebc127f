//! Dense exact matrices over arbitrary-precision integers and rationals.
//!
//! Determinants and inverses are computed with fraction-free (Bareiss)
//! elimination: every intermediate value is an integer minor of the input, so
//! each division performed along the way is exact.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<Rational>;

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols || self.rows == 0 {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows<R: AsRef<[T]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }
}

impl<T: Zero + One + Clone> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl IntMatrix {
    /// Builds an integer matrix from small machine integers.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        Matrix::from_rows(&rows)
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|v| Rational::from_integer(v.clone()))
    }
}

impl RatMatrix {
    /// Returns the integer matrix when every entry is integral.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        if self.data.iter().all(|v| v.is_integer()) {
            Some(self.map(|v| v.to_integer()))
        } else {
            None
        }
    }
}

/// Finds the first row at or below `k` with a nonzero entry in column `k`.
fn find_pivot(a: &IntMatrix, k: usize) -> Option<usize> {
    (k..a.rows).find(|&r| !a[(r, k)].is_zero())
}

fn swap_rows<T>(a: &mut Matrix<T>, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    let cols = a.cols;
    for j in 0..cols {
        a.data.swap(r1 * cols + j, r2 * cols + j);
    }
}

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "inexact division in fraction-free elimination");
    q
}

/// Exact determinant via Bareiss elimination.
pub fn det_exact(m: &IntMatrix) -> Result<BigInt> {
    let n = m.require_square()?;
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = find_pivot(&a, k) else {
            return Ok(BigInt::zero());
        };
        if p != k {
            swap_rows(&mut a, p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[(k, k)] * &a[(i, j)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = exact_div(v, &prev);
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    Ok(if negate { -d } else { d })
}

/// Exact inverse via fraction-free Gauss-Jordan elimination on `[m | I]`.
///
/// On completion the left block is `d * I` and the right block is `d * m^-1`
/// for the final pivot `d = ±det(m)`, so each entry needs a single division.
pub fn inverse_exact(m: &IntMatrix) -> Result<RatMatrix> {
    let (adj, d) = adjugate_with_det(m)?;
    if d.is_zero() {
        return Err(Error::SingularMatrix);
    }
    Ok(adj.map(|v| Rational::new(v.clone(), d.clone())))
}

/// Returns `(d * m^-1, d)` with `d = ±det(m)`, or `d = 0` when singular.
fn adjugate_with_det(m: &IntMatrix) -> Result<(IntMatrix, BigInt)> {
    let n = m.require_square()?;
    let w = 2 * n;
    let mut a = Matrix::from_fn(n, w, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    });
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = find_pivot(&a, k) else {
            return Ok((Matrix::from_fn(n, n, |_, _| BigInt::zero()), BigInt::zero()));
        };
        swap_rows(&mut a, p, k);
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..w {
                if j == k {
                    continue;
                }
                let v = &a[(k, k)] * &a[(i, j)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = exact_div(v, &prev);
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = a[(k, k)].clone();
    }
    let adj = Matrix::from_fn(n, n, |i, j| a[(i, n + j)].clone());
    Ok((adj, prev))
}

/// Exact inverse of a rational matrix.
///
/// Each row is scaled by the lcm of its denominators, `m = D^-1 B`, so
/// `m^-1 = B^-1 D`.
pub fn inverse_rational(m: &RatMatrix) -> Result<RatMatrix> {
    let n = m.require_square()?;
    let mut scales = Vec::with_capacity(n);
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        let scale = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        for v in m.row(i) {
            data.push(v.numer() * (&scale / v.denom()));
        }
        scales.push(scale);
    }
    let b = Matrix::from_vec(n, n, data)?;
    let inv = inverse_exact(&b)?;
    Ok(Matrix::from_fn(n, n, |i, j| {
        &inv[(i, j)] * Rational::from_integer(scales[j].clone())
    }))
}

/// Exact determinant of a rational matrix.
pub fn det_rational(m: &RatMatrix) -> Result<Rational> {
    let n = m.require_square()?;
    let mut denom = BigInt::one();
    let mut data = Vec::with_capacity(n * n);
    for i in 0..n {
        let scale = m
            .row(i)
            .iter()
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        for v in m.row(i) {
            data.push(v.numer() * (&scale / v.denom()));
        }
        denom *= scale;
    }
    let d = det_exact(&Matrix::from_vec(n, n, data)?)?;
    Ok(Rational::new(d, denom))
}

/// Exact matrix product.
pub fn mat_mul(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix> {
    if a.cols != b.rows {
        return Err(Error::DimensionMismatch {
            expected: a.cols,
            found: b.rows,
        });
    }
    let mut out = Vec::with_capacity(a.rows * b.cols);
    for i in 0..a.rows {
        for j in 0..b.cols {
            let mut acc = Rational::zero();
            for k in 0..a.cols {
                let (x, y) = (&a[(i, k)], &b[(k, j)]);
                if !x.is_zero() && !y.is_zero() {
                    acc += x * y;
                }
            }
            out.push(acc);
        }
    }
    Matrix::from_vec(a.rows, b.cols, out)
}

/// Sum of absolute values.
pub fn abs_sum<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Rational {
    values
        .into_iter()
        .fold(Rational::zero(), |acc, v| acc + v.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    fn rat(rows: &[&[i64]]) -> RatMatrix {
        int(rows).to_rational()
    }

    #[test]
    fn det_examples() {
        assert_eq!(det_exact(&IntMatrix::identity(3)).unwrap(), BigInt::from(1));
        assert_eq!(det_exact(&int(&[&[1, 1], &[1, -1]])).unwrap(), BigInt::from(-2));
        assert_eq!(
            det_exact(&int(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])).unwrap(),
            BigInt::from(2)
        );
    }

    #[test]
    fn det_needs_pivot_swap() {
        assert_eq!(det_exact(&int(&[&[0, 1], &[1, 0]])).unwrap(), BigInt::from(-1));
        assert_eq!(det_exact(&int(&[&[0]])).unwrap(), BigInt::zero());
        assert_eq!(det_exact(&int(&[&[1, 1], &[1, 1]])).unwrap(), BigInt::zero());
    }

    #[test]
    fn det_rejects_non_square() {
        let m = IntMatrix::from_i64_rows(&[[1, 2, 3]]).unwrap();
        assert_eq!(det_exact(&m), Err(Error::NotSquare { rows: 1, cols: 3 }));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            inverse_exact(&IntMatrix::identity(4)).unwrap(),
            RatMatrix::identity(4)
        );
        assert_eq!(
            inverse_exact(&int(&[&[1, 1, 1], &[1, 0, 1], &[0, 0, 1]])).unwrap(),
            rat(&[&[0, 1, -1], &[1, -1, 0], &[0, 0, 1]])
        );
        assert_eq!(
            inverse_exact(&int(&[&[1, 1], &[1, 1]])),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn inverse_of_bordered_identity() {
        for n in 1..=6 {
            let a = Matrix::from_fn(n + 1, n + 1, |i, j| {
                BigInt::from(i64::from(i == j || j == n))
            });
            let inv = inverse_exact(&a).unwrap();
            let expected = Matrix::from_fn(n + 1, n + 1, |i, j| {
                let v = if i == j {
                    1
                } else if j == n && i < n {
                    -1
                } else {
                    0
                };
                Rational::from_integer(v.into())
            });
            assert_eq!(inv, expected);
        }
    }

    #[test]
    fn product_examples() {
        let i3 = RatMatrix::identity(3);
        assert_eq!(mat_mul(&i3, &i3).unwrap(), i3);
        let p = mat_mul(&rat(&[&[1, 1], &[0, 1]]), &rat(&[&[1, -1], &[0, 1]])).unwrap();
        assert_eq!(p, RatMatrix::identity(2));
        assert!(matches!(
            mat_mul(&i3, &RatMatrix::identity(2)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn rational_inverse_clears_denominators() {
        let half = Rational::new(1.into(), 2.into());
        let m = Matrix::from_rows(&[
            vec![half.clone(), Rational::zero()],
            vec![Rational::one(), Rational::new(1.into(), 3.into())],
        ])
        .unwrap();
        let inv = inverse_rational(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv).unwrap(), RatMatrix::identity(2));
        assert_eq!(
            det_rational(&m).unwrap(),
            Rational::new(1.into(), 6.into())
        );
    }
}
