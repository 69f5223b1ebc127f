//! Node matrices of simplices and their basic Lagrange polynomials.
//!
//! For a nondegenerate simplex with vertices `x^(1), ..., x^(n+1)` in `R^n`,
//! the node matrix has row `j` equal to `(x^(j), 1)`. Column `j` of its
//! inverse holds the coefficients of the linear polynomial `λ_j` with
//! `λ_j(x^(k)) = δ_jk`; the last entry of the column is the constant term.

use num_traits::{Signed, Zero};

use crate::binary::Matrix01;
use crate::error::{Error, Result};
use crate::linalg::{inverse_exact, inverse_rational, Matrix, RatMatrix, Rational};

pub type Point = Vec<Rational>;

/// `(n+1) x (n+1)` matrix whose rows are the vertices extended by a trailing 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeMatrix {
    matrix: RatMatrix,
}

impl NodeMatrix {
    /// Dimension `n` of the ambient space.
    pub fn dim(&self) -> usize {
        self.matrix.rows() - 1
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    /// Vertex `j` (0-based), i.e. row `j` without the trailing 1.
    pub fn vertex(&self, j: usize) -> &[Rational] {
        &self.matrix.row(j)[..self.dim()]
    }

    pub fn vertices(&self) -> Vec<Point> {
        (0..=self.dim()).map(|j| self.vertex(j).to_vec()).collect()
    }
}

/// Borders a 0/1 matrix with the row `(0, ..., 0, 1)` and a column of ones.
///
/// Vertex `j` of the resulting simplex is row `j` of `m`; the last vertex is
/// the origin.
pub fn border_01(m: &Matrix01) -> NodeMatrix {
    let n = m.order();
    let matrix = Matrix::from_fn(n + 1, n + 1, |i, j| {
        let v = if j == n {
            1
        } else if i == n {
            0
        } else {
            i64::from(m.get(i, j))
        };
        Rational::from_integer(v.into())
    });
    NodeMatrix { matrix }
}

pub fn node_from_vertices(vertices: &[Point]) -> Result<NodeMatrix> {
    if vertices.len() < 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: vertices.len(),
        });
    }
    let n = vertices.len() - 1;
    if let Some(bad) = vertices.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: bad.len(),
        });
    }
    let matrix = Matrix::from_fn(n + 1, n + 1, |i, j| {
        if j == n {
            Rational::from_integer(1.into())
        } else {
            vertices[i][j].clone()
        }
    });
    Ok(NodeMatrix { matrix })
}

/// Inverse of a node matrix: column `j` holds the coefficients of `λ_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangeData {
    dim: usize,
    coeffs: RatMatrix,
}

impl LagrangeData {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &RatMatrix {
        &self.coeffs
    }

    /// `l_ij` with 0-based indices.
    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        &self.coeffs[(i, j)]
    }

    /// Coefficient row `i`: `(l_i1, ..., l_i,n+1)`.
    pub fn row(&self, i: usize) -> &[Rational] {
        self.coeffs.row(i)
    }

    /// Evaluates `λ_j(x)`; `x` must have `dim()` coordinates.
    pub fn lambda(&self, j: usize, x: &[Rational]) -> Rational {
        let n = self.dim;
        let mut acc = self.coeffs[(n, j)].clone();
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                acc += &self.coeffs[(i, j)] * xi;
            }
        }
        acc
    }
}

pub fn lagrange_data(a: &NodeMatrix) -> Result<LagrangeData> {
    let inverse = match a.matrix.to_integer() {
        Some(int) => inverse_exact(&int),
        None => inverse_rational(&a.matrix),
    };
    let coeffs = inverse.map_err(|e| match e {
        Error::SingularMatrix => Error::DegenerateSimplex,
        other => other,
    })?;
    Ok(LagrangeData {
        dim: a.dim(),
        coeffs,
    })
}

/// Barycentric coordinates `(λ_1(x), ..., λ_{n+1}(x))`.
pub fn barycentric_at(l: &LagrangeData, x: &[Rational]) -> Result<Vec<Rational>> {
    if x.len() != l.dim {
        return Err(Error::DimensionMismatch {
            expected: l.dim,
            found: x.len(),
        });
    }
    Ok((0..=l.dim).map(|j| l.lambda(j, x)).collect())
}

/// Whether `x` lies in the closed simplex, i.e. every `λ_j(x) >= 0`.
pub fn contains(l: &LagrangeData, x: &[Rational]) -> Result<bool> {
    Ok(barycentric_at(l, x)?.iter().all(|v| !v.is_negative()))
}
