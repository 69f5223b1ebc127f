use thiserror::Error;

/// Errors raised by the exact linear algebra, certification and search layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular (determinant is zero)")]
    SingularMatrix,

    #[error("degenerate simplex: node matrix has zero determinant")]
    DegenerateSimplex,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid entry {value} at ({row}, {col}) for {kind}")]
    InvalidEntry {
        row: usize,
        col: usize,
        value: i64,
        kind: &'static str,
    },

    #[error("order {order} exceeds the search budget of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("internal consistency failure: {0}")]
    InternalError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
