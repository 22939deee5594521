//! Exact computations with pencils of affine conics, their asymptotic
//! pencils and bisector fields, over the rationals and odd prime fields.
//!
//! Everything is generic over [`Field`]; the aliases below fix the two
//! concrete scalar types.

pub mod binary;
pub mod bisector;
pub mod conic;
pub mod error;
pub mod field;
pub mod geometry;
pub mod linalg;
pub mod oracle;
pub mod pencil;
pub mod quad;

pub use conic::{ConicClass, ConicKind, LinePair, MidResult, PairKind, Quadratic};
pub use error::{Error, QuadViolation, Result};
pub use field::{Field, FieldSpec, Fp};
pub use geometry::{AffineMap, Line, Midpoint, Point, ProjectivePoint};
pub use pencil::{AsymptoticPencil, NetCoords, Pencil};
pub use quad::Quadrilateral;

/// Arbitrary-precision rational scalar.
pub type Rational = num_rational::BigRational;

pub type QQuadratic = Quadratic<Rational>;
pub type QLine = Line<Rational>;
pub type QPencil = Pencil<Rational>;

pub type FpQuadratic = Quadratic<Fp>;
pub type FpLine = Line<Fp>;
pub type FpPencil = Pencil<Fp>;
