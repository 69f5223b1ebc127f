//! Exhaustive search for the maximum determinant of 0/1 and ±1 matrices of
//! small order, plus the maximum-volume simplex built from a maximizer.
//!
//! Matrices are enumerated as row-major bit strings in increasing binary
//! value. The top `n-1` rows form the outer loop; for each of them the
//! cofactors along the last row are computed once, after which every choice
//! of the last row costs a single dot product. The outer range is split into
//! contiguous chunks, one per worker, and partial results are merged in chunk
//! order, so the reported witness (smallest maximizing code) and the counts
//! do not depend on the number of workers.

use std::thread;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::binary::{Matrix01, MatrixPM1};
use crate::error::{Error, Result};
use crate::linalg::{det_exact, IntMatrix, Rational};
use crate::simplex::Point;

/// Largest order searched for 0/1 matrices without opting in.
pub const MAX_ORDER_01: usize = 5;
/// Largest order for 0/1 matrices when large orders are enabled.
pub const MAX_ORDER_01_EXTENDED: usize = 6;
/// Largest order searched for ±1 matrices.
pub const MAX_ORDER_PM1: usize = 6;

const MAX_N: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub workers: usize,
    /// Enables order 6 for 0/1 matrices (2^36 candidates; very slow).
    pub allow_large: bool,
    /// Keep every maximizer, not just the smallest one.
    pub collect_maximizers: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            workers: thread::available_parallelism().map_or(1, |n| n.get()),
            allow_large: false,
            collect_maximizers: false,
        }
    }
}

impl SearchConfig {
    pub fn with_workers(workers: usize) -> Self {
        SearchConfig {
            workers,
            ..SearchConfig::default()
        }
    }

    pub fn collecting(mut self) -> Self {
        self.collect_maximizers = true;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult<M> {
    pub order: usize,
    pub max_abs_det: BigInt,
    /// Maximizer with the smallest row-major bit string.
    pub witness: M,
    /// Number of enumerated matrices attaining the maximum. For ±1 matrices
    /// only those with all-ones first row and column are enumerated.
    pub count_maximizers: u64,
    /// All maximizers in enumeration order, when requested.
    pub maximizers: Option<Vec<M>>,
}

type Rows = [[i64; MAX_N]; MAX_N];

/// Which entries are free and how bits map to values.
#[derive(Clone, Copy)]
enum Layout {
    /// All `n²` entries free, bit = entry.
    ZeroOne,
    /// First row and column fixed to 1; interior bit 1 means -1.
    PlusMinusNormalized,
}

impl Layout {
    fn top_bits(self, n: usize) -> usize {
        match self {
            Layout::ZeroOne => (n - 1) * n,
            Layout::PlusMinusNormalized => n.saturating_sub(2) * (n - 1),
        }
    }

    fn last_bits(self, n: usize) -> usize {
        match self {
            Layout::ZeroOne => n,
            Layout::PlusMinusNormalized => n - 1,
        }
    }

    fn bit_value(self, bit: u64) -> i64 {
        match self {
            Layout::ZeroOne => bit as i64,
            Layout::PlusMinusNormalized => 1 - 2 * bit as i64,
        }
    }

    /// Fills rows `0..n-1` from the outer code.
    fn fill_top(self, n: usize, outer: u64, rows: &mut Rows) {
        let bits = self.top_bits(n);
        let mut k = 0;
        for (i, row) in rows.iter_mut().enumerate().take(n - 1) {
            for (j, slot) in row.iter_mut().enumerate().take(n) {
                *slot = match self {
                    Layout::PlusMinusNormalized if i == 0 || j == 0 => 1,
                    _ => {
                        let bit = (outer >> (bits - 1 - k)) & 1;
                        k += 1;
                        self.bit_value(bit)
                    }
                };
            }
        }
    }

    fn last_row(self, n: usize, r: u64) -> [i64; MAX_N] {
        let bits = self.last_bits(n);
        let mut row = [0i64; MAX_N];
        let mut k = 0;
        for (j, slot) in row.iter_mut().enumerate().take(n) {
            *slot = match self {
                Layout::PlusMinusNormalized if j == 0 => 1,
                _ => {
                    let bit = (r >> (bits - 1 - k)) & 1;
                    k += 1;
                    self.bit_value(bit)
                }
            };
        }
        row
    }
}

/// Bareiss determinant of the leading `k x k` block, `None` on overflow.
fn small_det(mut a: Rows, k: usize) -> Option<i64> {
    if k == 0 {
        return Some(1);
    }
    let mut sign = 1i64;
    let mut prev = 1i64;
    for p in 0..k - 1 {
        if a[p][p] == 0 {
            let Some(swap) = (p + 1..k).find(|&r| a[r][p] != 0) else {
                return Some(0);
            };
            a.swap(p, swap);
            sign = -sign;
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let v = a[p][p]
                    .checked_mul(a[i][j])?
                    .checked_sub(a[i][p].checked_mul(a[p][j])?)?;
                a[i][j] = v / prev;
            }
        }
        prev = a[p][p];
    }
    Some(sign * a[k - 1][k - 1])
}

/// Machine-word determinant with an exact fallback on overflow.
fn minor_det(a: Rows, k: usize) -> i64 {
    small_det(a, k).unwrap_or_else(|| {
        let rows: Vec<Vec<i64>> = a[..k].iter().map(|r| r[..k].to_vec()).collect();
        let m = IntMatrix::from_i64_rows(&rows).expect("rectangular");
        i64::try_from(det_exact(&m).expect("square")).expect("minor exceeds i64")
    })
}

/// Cofactors of the last row given the top `n-1` rows.
fn last_row_cofactors(n: usize, rows: &Rows) -> [i64; MAX_N] {
    let mut cof = [0i64; MAX_N];
    for (j, c) in cof.iter_mut().enumerate().take(n) {
        let mut minor = [[0i64; MAX_N]; MAX_N];
        for i in 0..n - 1 {
            let mut col = 0;
            for jj in 0..n {
                if jj != j {
                    minor[i][col] = rows[i][jj];
                    col += 1;
                }
            }
        }
        let d = minor_det(minor, n - 1);
        *c = if (n - 1 + j) % 2 == 0 { d } else { -d };
    }
    cof
}

#[derive(Debug)]
struct Tally {
    max: i64,
    first: u64,
    count: u64,
    all: Vec<u64>,
}

impl Tally {
    fn empty() -> Self {
        Tally {
            max: -1,
            first: 0,
            count: 0,
            all: Vec::new(),
        }
    }

    fn merge(&mut self, other: Tally) {
        if other.max > self.max {
            *self = other;
        } else if other.max == self.max && other.count > 0 {
            self.count += other.count;
            self.all.extend(other.all);
        }
    }
}

fn scan_chunk(layout: Layout, n: usize, start: u64, end: u64, collect: bool) -> Tally {
    let last_bits = layout.last_bits(n);
    let last_rows: Vec<[i64; MAX_N]> = (0..1u64 << last_bits)
        .map(|r| layout.last_row(n, r))
        .collect();
    let mut tally = Tally::empty();
    let mut rows: Rows = [[0; MAX_N]; MAX_N];
    for outer in start..end {
        layout.fill_top(n, outer, &mut rows);
        let cof = last_row_cofactors(n, &rows);
        for (r, last) in last_rows.iter().enumerate() {
            let det: i64 = (0..n).map(|j| last[j] * cof[j]).sum::<i64>().abs();
            if det < tally.max {
                continue;
            }
            let code = (outer << last_bits) | r as u64;
            if det > tally.max {
                tally.max = det;
                tally.first = code;
                tally.count = 0;
                tally.all.clear();
            }
            tally.count += 1;
            if collect {
                tally.all.push(code);
            }
        }
    }
    tally
}

fn scan(layout: Layout, n: usize, config: &SearchConfig) -> Tally {
    let outer_total = 1u64 << layout.top_bits(n);
    let workers = config.workers.max(1) as u64;
    let chunk = outer_total.div_ceil(workers);
    let bounds: Vec<(u64, u64)> = (0..workers)
        .map(|w| {
            let start = (w * chunk).min(outer_total);
            (start, ((w + 1) * chunk).min(outer_total))
        })
        .collect();
    let collect = config.collect_maximizers;
    let partials: Vec<Tally> = thread::scope(|s| {
        let handles: Vec<_> = bounds
            .iter()
            .map(|&(start, end)| s.spawn(move || scan_chunk(layout, n, start, end, collect)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    let mut total = Tally::empty();
    for p in partials {
        total.merge(p);
    }
    total
}

fn check_order(n: usize, max: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    if n > max {
        return Err(Error::OrderTooLarge { order: n, max });
    }
    Ok(())
}

fn finish<M>(
    n: usize,
    tally: Tally,
    decode: impl Fn(u64) -> M,
    exact_det: impl Fn(&M) -> BigInt,
) -> Result<SearchResult<M>> {
    let witness = decode(tally.first);
    let max_abs_det = BigInt::from(tally.max);
    if exact_det(&witness).abs() != max_abs_det {
        return Err(Error::InternalError(format!(
            "witness determinant does not match search maximum {}",
            tally.max
        )));
    }
    let maximizers = if tally.all.is_empty() {
        None
    } else {
        Some(tally.all.iter().map(|&c| decode(c)).collect())
    };
    Ok(SearchResult {
        order: n,
        max_abs_det,
        witness,
        count_maximizers: tally.count,
        maximizers,
    })
}

/// `h_n`: maximum `|det|` over all 0/1 matrices of order `n`.
pub fn brute_force_h(n: usize, config: &SearchConfig) -> Result<SearchResult<Matrix01>> {
    let max = if config.allow_large {
        MAX_ORDER_01_EXTENDED
    } else {
        MAX_ORDER_01
    };
    check_order(n, max)?;
    let tally = scan(Layout::ZeroOne, n, config);
    finish(
        n,
        tally,
        |code| Matrix01::from_code(n, u128::from(code)),
        Matrix01::det,
    )
}

/// Builds the normalized ±1 matrix whose interior is the given bit string.
pub fn pm1_from_interior_code(n: usize, code: u64) -> MatrixPM1 {
    let m = n - 1;
    let entries = (0..n * n)
        .map(|k| {
            let (i, j) = (k / n, k % n);
            if i == 0 || j == 0 {
                1
            } else {
                let pos = (i - 1) * m + (j - 1);
                if (code >> (m * m - 1 - pos)) & 1 == 1 {
                    -1
                } else {
                    1
                }
            }
        })
        .collect();
    MatrixPM1::new(n, entries).expect("entries are ±1")
}

/// `g_n`: maximum `|det|` over ±1 matrices of order `n`.
///
/// Negating rows or columns leaves `|det|` unchanged, so it suffices to
/// enumerate the `2^((n-1)²)` matrices with all-ones first row and column.
pub fn brute_force_g(n: usize, config: &SearchConfig) -> Result<SearchResult<MatrixPM1>> {
    check_order(n, MAX_ORDER_PM1)?;
    let tally = scan(Layout::PlusMinusNormalized, n, config);
    finish(n, tally, |code| pm1_from_interior_code(n, code), MatrixPM1::det)
}

/// Vertices (rows of `m` plus the origin) and volume `|det m| / n!` of the
/// simplex spanned by a 0/1 matrix.
pub fn simplex_from_maxdet(m: &Matrix01) -> Result<(Vec<Point>, Rational)> {
    let det = m.det();
    if det == BigInt::from(0) {
        return Err(Error::SingularMatrix);
    }
    let n = m.order();
    let mut vertices: Vec<Point> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|&v| Rational::from_integer(v.into()))
                .collect()
        })
        .collect();
    vertices.push(vec![Rational::from_integer(0.into()); n]);
    let factorial: BigInt = (1..=n).map(BigInt::from).product();
    Ok((vertices, Rational::new(det.abs(), factorial)))
}
