use thiserror::Error;

use crate::semiring::Flavor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible dimensions: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix must be square, found {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("empty input: vectors and matrices need at least one entry")]
    Empty,

    #[error("ragged matrix: row {row} has length {found}, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("expected a {expected} polytope, found {found}")]
    FlavorMismatch { expected: Flavor, found: Flavor },

    #[error("projectivisation needs at least 2 coordinates, found {0}")]
    TooFewCoordinates(usize),

    #[error("not a {0} Kleene star")]
    NotKleeneStar(Flavor),

    #[error("polytope is not min-plus convex (dominator column {column} is not a member)")]
    NotMinPlusConvex { column: usize },

    #[error("point {0} is not in the required span")]
    NotInSpan(String),

    #[error("trial count must be at least 1")]
    NoTrials,

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("not a rational number: {0:?}")]
    InvalidRational(String),
}
