//! Exact arithmetic: rationals, quadratic fields, polynomials, resultants.

mod factor;
mod field;
mod linalg;
mod multi;
mod poly;
mod quad;
mod rational;
mod resultant;
mod roots;

pub use factor::{is_probable_prime, squarefree_decompose};
pub use field::Field;
pub use linalg::nullspace;
pub use multi::MultiPoly;
pub use poly::UniPoly;
pub use quad::{sqrt_scalar, QuadElem, Scalar};
pub use rational::{ln_bigint, q, qi, rationals_by_height, Rational};
pub use resultant::{det_bareiss, discriminant, interpolate, resultant, resultant_in_last, sylvester_matrix};
pub use roots::{quad_solve, rational_roots, FieldDescriptor, RootSet};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("incompatible quadratic fields: d = {0} vs d = {1}")]
    IncompatibleField(i64, i64),
    #[error("invalid quadratic field parameter d = {0} (must be squarefree, not 0 or 1)")]
    BadField(i64),
    #[error("resultant of two zero polynomials is undefined")]
    BothZero,
    #[error("discriminant of a constant or zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("unsupported degree {0} (expected 1..=3)")]
    Degree(usize),
    #[error("cubic has no rational root; cannot split over a quadratic field: {0}")]
    UnsupportedSplitting(String),
    #[error("integer too large for the quadratic-field parameter: {0}")]
    Overflow(String),
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
