#![allow(dead_code)]

use detcert::{Matrix01, MatrixPM1, Rational};
use num_traits::Zero;
use rand::Rng;

pub fn ri(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn random_01<R: Rng>(rng: &mut R, n: usize) -> Matrix01 {
    Matrix01::new(n, (0..n * n).map(|_| rng.gen_range(0..=1)).collect()).unwrap()
}

pub fn random_nondegenerate_01<R: Rng>(rng: &mut R, n: usize) -> Matrix01 {
    loop {
        let m = random_01(rng, n);
        if !m.det().is_zero() {
            return m;
        }
    }
}

pub fn random_pm1<R: Rng>(rng: &mut R, n: usize) -> MatrixPM1 {
    MatrixPM1::new(n, (0..n * n).map(|_| if rng.gen() { 1 } else { -1 }).collect()).unwrap()
}

/// All 0/1 matrices of order `n`.
pub fn all_01(n: usize) -> impl Iterator<Item = Matrix01> {
    (0u128..1 << (n * n)).map(move |c| Matrix01::from_code(n, c))
}

/// All ±1 matrices of order `n`.
pub fn all_pm1(n: usize) -> impl Iterator<Item = MatrixPM1> {
    (0u128..1 << (n * n)).map(move |c| MatrixPM1::from_code(n, c))
}
