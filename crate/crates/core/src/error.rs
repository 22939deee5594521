use thiserror::Error;

use crate::field::FieldSpec;

pub type Result<T> = std::result::Result<T, Error>;

/// Clause of the quadrilateral definition that a pair of line pairs violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadViolation {
    TranslationPair,
    SharedLine,
    AllConcurrent,
    AllParallel,
}

impl std::fmt::Display for QuadViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            QuadViolation::TranslationPair => {
                "one pair of opposite sides is a translation of the other"
            }
            QuadViolation::SharedLine => "the two pairs share a line",
            QuadViolation::AllConcurrent => "all four lines pass through one point",
            QuadViolation::AllParallel => "all four lines are parallel",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("scalars from different fields: {0} and {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("infinite field: {0}")]
    InfiniteField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a quadratic: the degree-2 part vanishes")]
    NotQuadratic,
    #[error("not a line: both linear coefficients vanish")]
    NotALine,
    #[error("point is not on the line")]
    NotOnLine,
    #[error("lines are not parallel")]
    NotParallel,
    #[error("conic is not a hyperbola")]
    NotHyperbola,
    #[error("affine map is not invertible")]
    SingularMap,
    #[error("quadratics are not independent")]
    Dependent,
    #[error("not a quadrilateral: {0}")]
    Quadrilateral(QuadViolation),
    #[error("diagonal is undefined: {0}")]
    DiagonalUndefined(&'static str),
    #[error("asymptotic pencil is trivial (only same-center degenerate hyperbolas)")]
    Trivial,
    #[error("line passes through a basepoint of the pencil")]
    ThroughBasepoint,
    #[error("insufficient data: {0}")]
    InsufficientData(&'static str),
    #[error("unknown check id: {0}")]
    UnknownCheck(String),
    #[error("field too large: {0}")]
    FieldTooLarge(String),
    #[error("{0}")]
    Domain(String),
}
