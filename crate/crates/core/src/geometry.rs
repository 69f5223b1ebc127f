//! Axial diameters, maximal axial segments, and the cube-absorption
//! coefficients `α(S)` and `ξ(S)` of a simplex, all in exact arithmetic.

use num_traits::{One, Signed, Zero};

use crate::linalg::{abs_sum, Rational};
use crate::simplex::{LagrangeData, Point};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometryReport {
    pub axial_diameters: Vec<Rational>,
    pub alpha: Rational,
    pub xi: Rational,
    pub segment_centers: Vec<Point>,
    /// `m_ij = |l_ij| / Σ_k |l_ik|` for `i = 1..n`.
    pub weights: Vec<Vec<Rational>>,
}

fn two() -> Rational {
    Rational::from_integer(2.into())
}

/// `d_i = 2 / Σ_j |l_ij|` for each axis `i`.
pub fn axial_diameters(l: &LagrangeData) -> Vec<Rational> {
    (0..l.dim()).map(|i| two() / abs_sum(l.row(i))).collect()
}

/// Convex weights `m_ij` that express the center of the `i`-th maximal axial
/// segment through the vertices.
pub fn segment_weights(l: &LagrangeData, i: usize) -> Vec<Rational> {
    let row = l.row(i);
    let total = abs_sum(row);
    row.iter().map(|v| v.abs() / &total).collect()
}

/// Center `c^(i)` (0-based axis `i`) of the longest segment in the simplex
/// parallel to that axis. Its endpoints are `c^(i) ± (d_i / 2) e_i`.
pub fn segment_center(l: &LagrangeData, vertices: &[Point], i: usize) -> Point {
    assert!(i < l.dim(), "axis index {i} out of range for dimension {}", l.dim());
    let weights = segment_weights(l, i);
    let mut center = vec![Rational::zero(); l.dim()];
    for (w, x) in weights.iter().zip(vertices) {
        if w.is_zero() {
            continue;
        }
        for (c, xk) in center.iter_mut().zip(x) {
            *c += w * xk;
        }
    }
    center
}

/// Endpoints `(c - (d/2) e_i, c + (d/2) e_i)` of the maximal axial segment.
pub fn segment_endpoints(l: &LagrangeData, vertices: &[Point], i: usize) -> (Point, Point) {
    let center = segment_center(l, vertices, i);
    let half = Rational::one() / abs_sum(l.row(i));
    let mut lo = center.clone();
    let mut hi = center;
    lo[i] -= &half;
    hi[i] += &half;
    (lo, hi)
}

/// `α(S) = ½ Σ_{i<=n} Σ_j |l_ij|`.
pub fn alpha_of(l: &LagrangeData) -> Rational {
    (0..l.dim()).map(|i| abs_sum(l.row(i))).sum::<Rational>() / two()
}

/// `max over x in {0,1}^n of -λ_j(x)`, by choosing each coordinate to
/// maximize its own term.
pub fn max_neg_lambda_on_cube(l: &LagrangeData, j: usize) -> Rational {
    let n = l.dim();
    let mut acc = -l.coeff(n, j).clone();
    for i in 0..n {
        let c = l.coeff(i, j);
        if c.is_negative() {
            acc -= c;
        }
    }
    acc
}

/// `min over x in {0,1}^n of λ_j(x)`.
pub fn min_lambda_on_cube(l: &LagrangeData, j: usize) -> Rational {
    -max_neg_lambda_on_cube(l, j)
}

/// Whether the unit cube lies inside the simplex.
pub fn cube_inside(l: &LagrangeData) -> bool {
    (0..=l.dim()).all(|j| !min_lambda_on_cube(l, j).is_negative())
}

/// `ξ(S)`: smallest `σ >= 1` with the unit cube inside the homothetic copy
/// `σS` centered at the centroid.
///
/// Equals `(n+1) max_j max_{x in ver(Q_n)} (-λ_j(x)) + 1` when the cube is not
/// inside `S`, and 1 otherwise.
pub fn xi_of(l: &LagrangeData) -> Rational {
    if cube_inside(l) {
        return Rational::one();
    }
    let worst = (0..=l.dim())
        .map(|j| max_neg_lambda_on_cube(l, j))
        .max()
        .expect("at least two vertices");
    Rational::from_integer((l.dim() as i64 + 1).into()) * worst + Rational::one()
}

pub fn geometry_report(l: &LagrangeData, vertices: &[Point]) -> GeometryReport {
    let n = l.dim();
    GeometryReport {
        axial_diameters: axial_diameters(l),
        alpha: alpha_of(l),
        xi: xi_of(l),
        segment_centers: (0..n).map(|i| segment_center(l, vertices, i)).collect(),
        weights: (0..n).map(|i| segment_weights(l, i)).collect(),
    }
}
