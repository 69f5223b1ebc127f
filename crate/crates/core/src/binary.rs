//! Square matrices with entries restricted to {0, 1} or {-1, 1}.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{det_exact, IntMatrix, Matrix};

/// Square 0/1 matrix of order `n >= 1`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix01 {
    order: usize,
    entries: Vec<u8>,
}

/// Square ±1 matrix of order `n >= 1`, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixPM1 {
    order: usize,
    entries: Vec<i8>,
}

fn square_order(len: usize, rows: usize) -> Result<usize> {
    if rows == 0 {
        return Err(Error::NotSquare { rows: 0, cols: 0 });
    }
    if len != rows * rows {
        return Err(Error::NotSquare {
            rows,
            cols: len / rows,
        });
    }
    Ok(rows)
}

impl Matrix01 {
    pub fn new(order: usize, entries: Vec<u8>) -> Result<Self> {
        let order = square_order(entries.len(), order)?;
        if let Some(pos) = entries.iter().position(|&v| v > 1) {
            return Err(Error::InvalidEntry {
                row: pos / order,
                col: pos % order,
                value: i64::from(entries[pos]),
                kind: "0/1 matrix",
            });
        }
        Ok(Matrix01 { order, entries })
    }

    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.as_ref().len() != rows.len()) {
            return Err(Error::NotSquare {
                rows: rows.len(),
                cols: bad.as_ref().len(),
            });
        }
        let entries = rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect();
        Matrix01::new(rows.len(), entries)
    }

    pub fn identity(order: usize) -> Self {
        let entries = (0..order * order)
            .map(|k| u8::from(k / order == k % order))
            .collect();
        Matrix01 { order, entries }
    }

    /// Decodes a row-major bit string; the entry at (0, 0) is the most
    /// significant of the `order²` bits.
    pub fn from_code(order: usize, code: u128) -> Self {
        let total = order * order;
        let entries = (0..total)
            .map(|k| ((code >> (total - 1 - k)) & 1) as u8)
            .collect();
        Matrix01 { order, entries }
    }

    /// Row-major bit string as an integer, inverse of [`Matrix01::from_code`].
    pub fn code(&self) -> u128 {
        self.entries
            .iter()
            .fold(0u128, |acc, &v| (acc << 1) | u128::from(v))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn to_int(&self) -> IntMatrix {
        Matrix::from_fn(self.order, self.order, |i, j| BigInt::from(self.get(i, j)))
    }

    pub fn det(&self) -> BigInt {
        det_exact(&self.to_int()).expect("Matrix01 is square and nonempty")
    }
}

impl MatrixPM1 {
    pub fn new(order: usize, entries: Vec<i8>) -> Result<Self> {
        let order = square_order(entries.len(), order)?;
        if let Some(pos) = entries.iter().position(|&v| v != 1 && v != -1) {
            return Err(Error::InvalidEntry {
                row: pos / order,
                col: pos % order,
                value: i64::from(entries[pos]),
                kind: "±1 matrix",
            });
        }
        Ok(MatrixPM1 { order, entries })
    }

    pub fn from_rows<R: AsRef<[i8]>>(rows: &[R]) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.as_ref().len() != rows.len()) {
            return Err(Error::NotSquare {
                rows: rows.len(),
                cols: bad.as_ref().len(),
            });
        }
        let entries = rows.iter().flat_map(|r| r.as_ref().iter().copied()).collect();
        MatrixPM1::new(rows.len(), entries)
    }

    /// Decodes a row-major bit string where bit 1 stands for -1.
    pub fn from_code(order: usize, code: u128) -> Self {
        let total = order * order;
        let entries = (0..total)
            .map(|k| if (code >> (total - 1 - k)) & 1 == 1 { -1 } else { 1 })
            .collect();
        MatrixPM1 { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [i8] {
        &mut self.entries
    }

    pub fn to_int(&self) -> IntMatrix {
        Matrix::from_fn(self.order, self.order, |i, j| BigInt::from(self.get(i, j)))
    }

    pub fn det(&self) -> BigInt {
        det_exact(&self.to_int()).expect("MatrixPM1 is square and nonempty")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_entries_and_shapes() {
        assert!(matches!(
            Matrix01::new(2, vec![0, 1, 2, 0]),
            Err(Error::InvalidEntry { row: 1, col: 0, value: 2, .. })
        ));
        assert!(matches!(
            MatrixPM1::new(2, vec![1, 0, 1, 1]),
            Err(Error::InvalidEntry { row: 0, col: 1, .. })
        ));
        assert!(Matrix01::from_rows(&[vec![0, 1], vec![1]]).is_err());
        assert!(Matrix01::new(0, vec![]).is_err());
    }

    #[test]
    fn code_is_row_major_msb_first() {
        let m = Matrix01::from_rows(&[[1, 0], [0, 0]]).unwrap();
        assert_eq!(m.code(), 0b1000);
        assert_eq!(Matrix01::from_code(2, 0b1000), m);
        assert_eq!(Matrix01::from_code(3, 0b100_010_001), Matrix01::identity(3));
        let u = MatrixPM1::from_code(2, 0b0001);
        assert_eq!(u.entries(), &[1, 1, 1, -1]);
    }
}
